#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: unknown ids, violated preconditions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside what an operation supports
/// (a loop handed to the incidence matrix, for instance).
class Unsupported : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A search would exceed its budget. Raised before any work is done.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": search space " + std::to_string(required) + " exceeds budget " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

namespace detail {

// Saturating arithmetic for search-space estimates.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

inline std::uint64_t sat_factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = sat_mul(r, i);
  return r;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step
    std::uint64_t num = n - k + i;
    if (r > UINT64_MAX / num) return UINT64_MAX;
    r = r * num / i;
  }
  return r;
}

inline void require_budget(const char* what, std::uint64_t required, std::uint64_t budget) {
  if (required > budget) throw ResourceLimit(what, required, budget);
}

}  // namespace detail
}  // namespace gcat
