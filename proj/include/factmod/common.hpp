#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace factmod {

inline constexpr const char* kVersion = "0.1.0";

// Exact nonnegative counts.  Tuple counts grow like N^ell, which overflows
// 64-bit words well inside the supported parameter range, so all counting
// results use arbitrary precision.
using CountScalar = mpz_class;

enum class SequenceKind { factorial, central_binomial, double_factorial };

const char* to_string(SequenceKind kind);
SequenceKind sequence_kind_from_string(const std::string& name);

// Half-open description of the summation range n = h+1 .. h+n_len.
struct Window {
  std::uint64_t h = 0;  // offset H
  std::uint64_t n = 1;  // length N
};

enum class errc {
  even_or_too_small,
  not_prime,
  window_out_of_range,
  ell_out_of_range,
  j_out_of_range,
  degree_out_of_range,
  non_invertible_multiplier,
  invalid_subset,
  bad_range,
  out_of_range,
  too_large,
  domain_violation,
  not_supported,
};

class domain_error : public std::runtime_error {
 public:
  domain_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Raised when a cross-check that can only fail due to a bug fails.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw domain_error(code, what);
}

}  // namespace factmod
