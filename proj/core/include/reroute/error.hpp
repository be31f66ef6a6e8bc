#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reroute {

enum class ErrorCode {
  // network
  DuplicateId,
  DanglingEndpoint,
  NonPositiveLength,
  InvalidLayout,
  MissingWarehouseOrCustomer,
  DisconnectedNode,
  UnknownLink,
  LengthMismatch,
  BreakdownAlreadyPresent,
  // scenario
  ParseError,
  MissingWorkshopParams,
  NonPositiveSpeed,
  NoBreakdown,
  UnknownNodeReference,
  UnknownFixture,
  NotSolvable,
  // solvers
  Infeasible,
  ResidualCycle,
  UnknownSource,
  Unreachable,
  AllUnreachable,
  CapExceeded,
};

std::string_view to_string(ErrorCode code);

/// Every failure surfaced by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One problem found while validating input; validation collects these
/// instead of stopping at the first one.
struct Issue {
  ErrorCode code;
  std::string message;
};

}  // namespace reroute
