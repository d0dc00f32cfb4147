#pragma once

#include <string>
#include <string_view>

namespace gcat {

using VertexId = std::string;
using EdgeId = std::string;

/// Natural ordering on ids: digit runs compare numerically, everything
/// else bytewise. "e2" < "e10", "9" < "10". Every canonical enumeration
/// in the library uses this order.
bool natural_less(std::string_view a, std::string_view b) noexcept;

struct NaturalLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    return natural_less(a, b);
  }
};

}  // namespace gcat
