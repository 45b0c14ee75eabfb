#pragma once

#include <cstdint>
#include <vector>

#include "factmod/common.hpp"

namespace factmod {

// Exact cyclic convolution over Z_L, c[k] = sum_{i+j = k mod L} a[i] b[j].
// Small lengths go through the quadratic schoolbook loop; larger ones run
// number-theoretic transforms over enough 64-bit primes that the CRT
// reconstruction modulus strictly exceeds every output entry, so the result
// is exact regardless of magnitude.
std::vector<CountScalar> cyclic_convolve(const std::vector<CountScalar>& a,
                                         const std::vector<CountScalar>& b);

// Exact ell-fold cyclic self-convolution of h over Z_L (ell >= 1).
std::vector<CountScalar> cyclic_power(const std::vector<CountScalar>& h,
                                      unsigned ell);

// Indicator of which residues mod L are hit by an ell-fold sum of positions
// drawn from the support of h.  Entries are 0/1.
std::vector<std::uint8_t> cyclic_power_support(const std::vector<std::uint8_t>& h,
                                               unsigned ell);

namespace detail {

struct NttModulus {
  std::uint64_t q;
  std::uint64_t root;     // primitive root of q
  unsigned two_adic;      // largest k with 2^k | q-1
};

// All moduli are Proth primes below 2^32; products fit comfortably in
// 64-bit unsigned arithmetic.
inline constexpr NttModulus kNttModuli[] = {
    {2013265921ull, 31, 27}, {2281701377ull, 3, 27}, {1811939329ull, 13, 26},
    {469762049ull, 3, 26},   {167772161ull, 3, 25},  {2113929217ull, 5, 25},
    {1711276033ull, 29, 25}, {998244353ull, 3, 23},
};

void ntt_pow2(std::vector<std::uint64_t>& a, const NttModulus& m, bool invert);

}  // namespace detail

}  // namespace factmod
