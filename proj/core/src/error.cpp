#include "reroute/error.hpp"

namespace reroute {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::InvalidLayout: return "InvalidLayout";
    case ErrorCode::MissingWarehouseOrCustomer: return "MissingWarehouseOrCustomer";
    case ErrorCode::DisconnectedNode: return "DisconnectedNode";
    case ErrorCode::UnknownLink: return "UnknownLink";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BreakdownAlreadyPresent: return "BreakdownAlreadyPresent";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingWorkshopParams: return "MissingWorkshopParams";
    case ErrorCode::NonPositiveSpeed: return "NonPositiveSpeed";
    case ErrorCode::NoBreakdown: return "NoBreakdown";
    case ErrorCode::UnknownNodeReference: return "UnknownNodeReference";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ResidualCycle: return "ResidualCycle";
    case ErrorCode::UnknownSource: return "UnknownSource";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::AllUnreachable: return "AllUnreachable";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace reroute
