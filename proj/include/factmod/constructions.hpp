#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "factmod/fieldcore.hpp"

namespace factmod {

// b!(p-1-b)! == (-1)^{b+1} mod p, a direct consequence of Wilson's theorem.
struct WilsonPair {
  std::uint64_t b = 0;
  std::uint64_t product = 0;   // b!(p-1-b)! mod p
  int sign = 1;                // (-1)^{b+1}
};
WilsonPair wilson_pair(const PrimeContext& ctx, std::uint64_t b);

// Every a in F_p^* is ((p-1)!)^{r_b} (b-1)! (p-1-b)! with b = a^{-1} and
// r_b = (b+1) mod 2.  The witness re-validates by multiplication.
struct WilsonWitness {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  unsigned r_b = 0;
  std::uint64_t product = 0;  // recomputed representation, equals a
};
WilsonWitness wilson_representation(const PrimeContext& ctx, std::uint64_t a);

// First J gaps of the quadratic nonresidue sequence 0 = n_0 < n_1 < ... and
// the exact identity sum_{j<=J} (-1)^{j-1} d_j = sum_{n=0}^{n_J - 1} (n!/p).
struct SpacingReport {
  std::uint64_t p = 0;
  std::uint64_t j_count = 0;
  std::vector<std::uint64_t> gaps;
  std::int64_t alt_sum = 0;
  std::int64_t legendre_sum = 0;
  std::uint64_t n_j = 0;  // J-th nonresidue
};
SpacingReport nonresidue_spacings(const PrimeContext& ctx, std::uint64_t j_count);

// Smallest n >= 1 with u(n) a primitive root mod p, if one exists in range.
struct PrimrootHit {
  bool found = false;
  std::uint64_t n = 0;
  double ratio = 0.0;  // n / sqrt(p)
};
PrimrootHit find_primroot_factorial(const PrimeContext& ctx);

// Q(w): how many n in the window have u(n) a primitive root.
std::uint64_t count_Q(const PrimeContext& ctx, const Window& w);

// Q_m(w): how many n have u(n), ..., u(n+m-1) all primitive roots.  Values
// past the valid sequence range vanish mod p and simply never qualify.
std::uint64_t count_Qm(const PrimeContext& ctx, std::uint64_t m, const Window& w);

// Counts n in the window whose u(n) is a q-th power residue exactly for the
// q in subset (subset of the prime divisors of p-1), plus the heuristic
// main term N * prod_{q in R} 1/q * prod_{q notin R} (q-1)/q.
struct PowerClassReport {
  std::vector<std::uint64_t> subset;
  std::uint64_t count = 0;
  double main_term = 0.0;
};
PowerClassReport classify_power_residues(const PrimeContext& ctx,
                                         const std::vector<std::uint64_t>& subset,
                                         const Window& w);

// W = #{(u,v), 0 <= u,v <= (p-3)/2 : 2u(2u+1) == 2v mod p} and the derived
// value-set lower bound (p-1)/2 + W/2 for V_2(0, p-1).
struct V2WitnessReport {
  std::uint64_t w_count = 0;
  double lower_bound = 0.0;
  double w_over_quarter_p = 0.0;
};
V2WitnessReport v2_witness_count(const PrimeContext& ctx);

// Are 2!, 3!, ..., (p-1)! pairwise distinct mod p?  When they are, the one
// missing nonzero residue is checked against -((p-1)/2)! and p mod 8.
struct DistinctScanRecord {
  std::uint64_t p = 0;
  bool is_distinct = false;
  std::uint64_t missing_residue = 0;     // meaningful when is_distinct
  bool missing_matches_prediction = false;
  bool mod8_matches_prediction = false;  // p == 5 (mod 8)
};
DistinctScanRecord distinct_factorial_check(std::uint64_t p);
std::vector<DistinctScanRecord> distinct_factorial_scan(std::uint64_t lo,
                                                        std::uint64_t hi,
                                                        unsigned jobs = 1);

// Lexicographically smallest (n_1..n_ell), n_i <= max_n, with
// prod n_i! == a mod p; std::nullopt when no tuple exists.  Feasibility per
// suffix arity comes from exact convolution support tables, so the search
// never enumerates tuples.
std::optional<std::vector<std::uint64_t>> search_representation(
    const PrimeContext& ctx, std::uint64_t a, unsigned ell,
    std::uint64_t max_n);

// Per-prime V_1(0, p-1)/p against the heuristic limit 1 - 1/e.
struct GuyF11Row {
  std::uint64_t p = 0;
  std::uint64_t v1 = 0;
  double ratio = 0.0;
};
struct GuyF11Report {
  std::vector<GuyF11Row> rows;
  double mean = 0.0;
  double stddev = 0.0;
  double target = 0.0;  // 1 - 1/e
};
GuyF11Report guy_f11_report(std::uint64_t lo, std::uint64_t hi,
                            unsigned jobs = 1);

}  // namespace factmod
