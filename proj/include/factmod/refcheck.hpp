#pragma once

#include <cstdint>
#include <vector>

#include "factmod/fieldcore.hpp"

namespace factmod {
namespace refcheck {

// Brute-force counterparts of the counting operations, built from the
// definitions alone (tuple enumeration, no convolutions, no shared helpers
// beyond the residue generator).  Enumeration sizes are capped at 1e8
// (errc::too_large) to keep them honest reference implementations.

// I_ell: 2ell-fold enumeration of equal-product tuple pairs.
CountScalar oracle_I(const PrimeContext& ctx, const Window& w, unsigned ell);

// J_ell: 2ell-fold enumeration of equal-sum tuple pairs.
CountScalar oracle_J(const PrimeContext& ctx, const Window& w, unsigned ell);

// F_ell(a): ell-fold enumeration of products.
CountScalar oracle_F(const PrimeContext& ctx, std::uint64_t a, const Window& w,
                     unsigned ell);

// V_ell: distinct products over the ell-fold enumeration.
std::uint64_t oracle_V(const PrimeContext& ctx, const Window& w, unsigned ell);

// G_ell(a, N): enumeration of all compositions of N into ell positive parts.
CountScalar oracle_G(const PrimeContext& ctx, std::uint64_t a, std::uint64_t n,
                     unsigned ell);

// D_ell(a, w): all O(M^2) endpoint pairs over the M = N^ell points (plus the
// interval bounds 0 and 1), exact integer comparisons.  Returns the reduced
// fraction num/den.
struct OracleDiscrepancy {
  CountScalar num;
  CountScalar den;
  double d = 0.0;
};
OracleDiscrepancy oracle_D(const PrimeContext& ctx, std::uint64_t a,
                           const Window& w, unsigned ell);

}  // namespace refcheck
}  // namespace factmod
