#include "gcat/ids.hpp"

#include <cctype>

namespace gcat {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool natural_less(std::string_view a, std::string_view b) noexcept {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t i0 = i, j0 = j;
      while (i < a.size() && is_digit(a[i])) ++i;
      while (j < b.size() && is_digit(b[j])) ++j;
      // strip leading zeros, then longer run is larger
      std::size_t si = i0, sj = j0;
      while (si + 1 < i && a[si] == '0') ++si;
      while (sj + 1 < j && b[sj] == '0') ++sj;
      std::string_view ra = a.substr(si, i - si), rb = b.substr(sj, j - sj);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      // "01" vs "1": fewer leading zeros first keeps the order strict
      if (i - i0 != j - j0) return (i - i0) < (j - j0);
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

}  // namespace gcat
