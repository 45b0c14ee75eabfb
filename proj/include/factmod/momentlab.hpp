#pragma once

#include <cstdint>
#include <vector>

#include "factmod/charspectrum.hpp"
#include "factmod/fieldcore.hpp"

namespace factmod {

enum class Domain { multiplicative, additive };

// Exact counts per residue class: index ind(u(n)) over Z_{p-1} in the
// multiplicative domain, value u(n) over Z_p in the additive one.
struct ResidueHistogram {
  Domain domain = Domain::multiplicative;
  std::uint64_t p = 0;
  std::vector<CountScalar> counts;
};

ResidueHistogram histogram(const PrimeContext& ctx, const Window& w,
                           Domain domain);

// I_ell = #{(n_1..n_2ell) in window: prod of first ell factorials equals
// prod of last ell mod p}, computed as the sum of squares of the ell-fold
// cyclic convolution of the multiplicative histogram.  Exact.
CountScalar count_I(const PrimeContext& ctx, const Window& w, unsigned ell);

// J_ell: same with sums of sequence values mod p (additive domain).
CountScalar count_J(const PrimeContext& ctx, const Window& w, unsigned ell);

// sum over all p-1 multiplicative characters of |T(chi,f,w)|^{2 ell}.
double moment_T(const PrimeContext& ctx, const PhasePolynomial& f,
                const Window& w, unsigned ell);

// sum over a = 0..p-1 of |S(a,w)|^{2 ell}.
double moment_S(const PrimeContext& ctx, const Window& w, unsigned ell);

void require_ell(unsigned ell);  // 1..8 for the exact counting ops

}  // namespace factmod
