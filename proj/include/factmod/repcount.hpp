#pragma once

#include <cstdint>
#include <vector>

#include "factmod/dft.hpp"
#include "factmod/fieldcore.hpp"

namespace factmod {

// F_ell(a): number of ordered ell-tuples of window positions whose sequence
// values multiply to a mod p.  Indexed by residue; slot 0 stays 0 because
// in-window values are never divisible by p.
struct RepresentationTable {
  std::uint64_t p = 0;
  unsigned ell = 1;
  Window window;
  std::vector<CountScalar> by_residue;  // length p, [0] == 0

  const CountScalar& at(std::uint64_t a) const { return by_residue.at(a); }
};

RepresentationTable table_F(const PrimeContext& ctx, const Window& w,
                            unsigned ell);

// V_ell = #{a : F_ell(a) > 0}.
std::uint64_t value_set_V(const PrimeContext& ctx, const Window& w,
                          unsigned ell);

// Largest single-value multiplicity of the window, smallest residue wins ties.
struct MaxF1 {
  std::uint64_t a = 0;
  CountScalar count;
};
MaxF1 max_F1(const PrimeContext& ctx, const Window& w);

// G_ell(a, N): ordered ell-tuples of positive integers with exact integer sum
// N whose factorials multiply to a mod p.  The N < p/ell hypothesis is
// enforced unless lift_sum_cap is set.
CountScalar count_G(const PrimeContext& ctx, std::uint64_t a, std::uint64_t n,
                    unsigned ell, bool lift_sum_cap = false);

// All residues at once: slot a holds G_ell(a, N).  One DP pass.
std::vector<CountScalar> table_G(const PrimeContext& ctx, std::uint64_t n,
                                 unsigned ell, bool lift_sum_cap = false);

// Exact extreme discrepancy of the weighted point multiset
// { (a * prod u(n_i)) / p } with multiplicities F_ell.  The supremum over
// closed intervals [alpha, beta] in [0,1] is attained among
//   - closed intervals with endpoints at occupied grid points (mass surplus),
//   - limits of open intervals between grid points (mass deficit),
// and both families are scanned with exact integer comparisons over the
// common denominator p * N^ell.  Degenerate intervals [x,x] are genuine
// closed intervals and participate: a singleton point multiset has D = 1.
struct DiscrepancyResult {
  std::uint64_t a = 0;
  unsigned ell = 1;
  double d = 0.0;
  double alpha = 0.0, beta = 0.0;  // an interval attaining the supremum
  CountScalar num;                 // exact value: num / den, reduced
  CountScalar den;
};

DiscrepancyResult discrepancy_D(const PrimeContext& ctx, std::uint64_t a,
                                const Window& w, unsigned ell);

// Same, reusing an already-built representation table (sweeps over a).
DiscrepancyResult discrepancy_from_table(const PrimeContext& ctx,
                                         std::uint64_t a,
                                         const RepresentationTable& t);

// sum over residues c of F_ell(c) e^{2 pi i a c / p}.
cplx exp_sum_product(const PrimeContext& ctx, std::uint64_t a, const Window& w,
                     unsigned ell);

}  // namespace factmod
