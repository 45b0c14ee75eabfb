#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "factmod/fieldcore.hpp"

namespace factmod {

// Every closed-form right-hand side the toolkit can measure exact values
// against.  Implied constants are 1 and logs are natural throughout.
enum class BoundKind {
  T_individual,     // N^{3/4} p^{1/8} (log p)^{1/4}
  T_secondmoment,   // p N^{3/2}            (lhs: sum over all chi of |T|^2)
  S_secondmoment,   // p N^{3/2}            (lhs: sum over all a of |S|^2)
  I_moment,         // N^{2l-1+2^{-l}}
  I_asymptotic,     // main N^{2l}/(p-1), err N^{3l/2+r/2-1+2^{-r}} p^{(l-r)/4} log^{(l-r)/2} p
  F_uniform,        // main N^l/(p-1),    err N^{3l/4+r/2-1+2^{-r}} p^{(l-2r)/8} log^{(l-2r)/4} p
  V_valueset,       // main p,            err N^{-l/2+r/2-1+2^{-r}} p^{(l-r+8)/4} log^{(l-r)/2} p
  D_discrepancy,    // N^{-l/4+r/2-1+2^{-r}} p^{(l-2r+4)/8} log^{(l-2r+4)/4} p
  G_fixedsum,       // main binom(N-1,l-1)/(p-1), err N^{3l/4} p^{(l+6)/8} log^{(l-2)/4} p
  F_max,            // N^{2/3}
  V2_lower,         // main 5p/8, err p^{1/2} log^2 p
  spacing_altsum,   // J^{3/4} p^{1/8} (log p)^{1/4}
  Q_primroot,       // main N phi(p-1)/(p-1), err N^{3/4} p^{1/8+eps}
  polya_vinogradov, // p^{1/2} log p
  J_moment,         // N^{2l-1+1/(l+1)}
};

const char* to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& name);
std::vector<BoundKind> all_bound_kinds();

struct BoundParams {
  std::uint64_t p = 0;
  std::uint64_t n = 0;                 // window length (or G's part sum)
  std::uint64_t h = 0;
  unsigned ell = 1;
  unsigned r = 1;
  std::uint64_t j_gaps = 0;            // spacing_altsum: number of gaps
  double eps = 0.01;                   // Q_primroot exponent tweak
  std::optional<std::uint64_t> a;      // fix a for D_discrepancy
  bool explicit_window = false;        // keep caller's (h, n) during sweeps
};

// Right-hand side (the error term for asymptotic kinds).  Throws
// domain_error(errc::domain_violation) outside the kind's validity range,
// e.g. F_uniform needs ell >= 2r >= 1.
double eval_bound(BoundKind kind, const BoundParams& params);

// Main term for asymptotic kinds, std::nullopt for pure upper bounds.
std::optional<double> eval_main_term(BoundKind kind, const BoundParams& params);

struct BoundReport {
  BoundKind kind;
  std::uint64_t p = 0, h = 0, n = 0;
  unsigned ell = 1, r = 1;
  std::string lhs;        // decimal string for exact counts, %.17g otherwise
  double lhs_value = 0.0;
  double main_term = 0.0; // 0 when the kind has none
  double rhs = 0.0;
  double ratio = 0.0;     // |lhs - main| / rhs, with main = 0 for pure bounds
};

// Exact left-hand sides per prime against the chosen bound.  Windows default
// to (0, p-1) per prime (G: N = floor((p-1)/ell)) unless explicit_window.
std::vector<BoundReport> ratio_sweep(BoundKind kind,
                                     const std::vector<std::uint64_t>& primes,
                                     const BoundParams& params,
                                     unsigned jobs = 1);

}  // namespace factmod
