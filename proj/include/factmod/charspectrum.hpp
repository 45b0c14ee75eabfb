#pragma once

#include <cstdint>
#include <vector>

#include "factmod/dft.hpp"
#include "factmod/fieldcore.hpp"

namespace factmod {

// f(n) = c0 + c1*n + ... + cd*n^d evaluated mod p; degree capped at 8.
struct PhasePolynomial {
  std::vector<std::uint64_t> coeffs;  // c0 first; empty means f = 0

  bool zero() const;
  std::uint64_t degree() const;
  std::uint64_t eval(std::uint64_t n, std::uint64_t p) const;
  void validate(std::uint64_t p) const;
};

// T(chi_j, f, w) = sum_{n=H+1}^{H+N} chi_j(u(n)) e(f(n)) where
// chi_j(x) = e^{2 pi i j ind(x)/(p-1)} and e(z) = e^{2 pi i z / p}.
// Direct O(N) evaluation with compensated accumulation.
cplx sum_T(const PrimeContext& ctx, std::uint64_t j, const PhasePolynomial& f,
           const Window& w);

// S(a, w) = sum_{n=H+1}^{H+N} e(a*u(n)).
cplx sum_S(const PrimeContext& ctx, std::uint64_t a, const Window& w);

// All p-1 multiplicative-character sums at once: entry j equals
// sum_T(ctx, j, f, w).  One exact-length DFT over Z_{p-1}.
std::vector<cplx> spectrum_T(const PrimeContext& ctx, const PhasePolynomial& f,
                             const Window& w);

// All p additive sums: entry a equals sum_S(ctx, a, w).  DFT over Z_p.
std::vector<cplx> spectrum_S(const PrimeContext& ctx, const Window& w);

// max over nonprincipal chi and over 0 <= h <= k <= p-1 of
// |sum_{c=h+1}^{k} chi(c)|: the incomplete-sum maximum that the
// p^{1/2} log p benchmark is measured against.
double max_incomplete_char_sum(const PrimeContext& ctx);

}  // namespace factmod
