#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>

namespace reroute {

/// 1-based identifier tagged by what it names, so node and link ids never mix.
template <class Tag>
class Id {
 public:
  constexpr Id() = default;
  constexpr explicit Id(std::int32_t value) : value_(value) {}

  constexpr std::int32_t value() const { return value_; }
  /// 0-based position for dense storage.
  constexpr std::size_t index() const { return static_cast<std::size_t>(value_ - 1); }
  constexpr bool valid() const { return value_ > 0; }

  friend constexpr auto operator<=>(Id, Id) = default;

  friend std::ostream& operator<<(std::ostream& os, Id id) { return os << id.value_; }

 private:
  std::int32_t value_ = 0;
};

struct NodeTag {};
struct LinkTag {};

using NodeId = Id<NodeTag>;
using LinkId = Id<LinkTag>;

}  // namespace reroute

template <class Tag>
struct std::hash<reroute::Id<Tag>> {
  std::size_t operator()(reroute::Id<Tag> id) const noexcept {
    return std::hash<std::int32_t>{}(id.value());
  }
};
