#pragma once

#include <cstdint>
#include <vector>

#include "factmod/common.hpp"

namespace factmod {

// Immutable per-prime state: modulus, smallest primitive root g and the
// materialized discrete-log table ind with g^ind(x) = x.  Safe to share
// across threads once built.
struct PrimeContext {
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  SequenceKind kind = SequenceKind::factorial;
  std::vector<std::uint32_t> ind;   // length p, ind[0] is a poisoned slot
  std::vector<std::uint32_t> pow;   // length p-1, pow[k] = g^k mod p

  // ind(x) for 1 <= x <= p-1; the index of 0 does not exist.
  std::uint32_t index_of(std::uint64_t x) const {
    if (x == 0 || x >= p)
      fail(errc::out_of_range, "index_of: x=" + std::to_string(x) +
                                   " outside 1.." + std::to_string(p - 1));
    return ind[x];
  }

  std::uint64_t power_of_root(std::uint64_t k) const { return pow[k % (p - 1)]; }

  // Largest n for which u(n) is defined and nonzero mod p.
  std::uint64_t max_sequence_arg() const;

  void require_window(const Window& w) const;
};

// Validates primality (p an odd prime, 3 <= p < 2^31), finds the smallest
// primitive root and fills the index tables in O(p).
PrimeContext build_context(std::uint64_t p,
                           SequenceKind kind = SequenceKind::factorial);

// u(h+1), ..., u(h+n) where u is n!, binom(2n,n) or (2n+1)!! mod p.
std::vector<std::uint64_t> sequence_residues(const PrimeContext& ctx,
                                             const Window& w);

// u(0), ..., u(n_max); the prefix every window walk is based on.
std::vector<std::uint64_t> sequence_prefix(const PrimeContext& ctx,
                                           std::uint64_t n_max);

// Legendre symbol (x/p) in {-1, 0, +1} via the parity of ind(x).
int legendre(const PrimeContext& ctx, std::uint64_t x);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace factmod
