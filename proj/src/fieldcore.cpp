#include "factmod/fieldcore.hpp"

#include <algorithm>
#include <numeric>

namespace factmod {

const char* to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::factorial: return "factorial";
    case SequenceKind::central_binomial: return "central-binomial";
    case SequenceKind::double_factorial: return "double-factorial";
  }
  return "?";
}

SequenceKind sequence_kind_from_string(const std::string& name) {
  if (name == "factorial") return SequenceKind::factorial;
  if (name == "central-binomial") return SequenceKind::central_binomial;
  if (name == "double-factorial") return SequenceKind::double_factorial;
  fail(errc::not_supported, "unknown sequence kind '" + name + "'");
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  // mod < 2^32 everywhere in this project, so products fit in 64 bits.
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) fail(errc::bad_range, "empty prime range");
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  std::vector<bool> sieve(hi + 1, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t d = 2; d * d <= hi; ++d) {
    if (!sieve[d]) continue;
    for (std::uint64_t m = d * d; m <= hi; m += d) sieve[m] = false;
  }
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
    if (sieve[n]) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> qs;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      qs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) qs.push_back(n);
  return qs;
}

std::uint64_t PrimeContext::max_sequence_arg() const {
  switch (kind) {
    case SequenceKind::factorial: return p - 1;
    // binom(2n,n): the step multiplier 2k-1 hits 0 mod p at k=(p+1)/2.
    case SequenceKind::central_binomial: return (p - 1) / 2;
    // (2n+1)!!: the factor 2n+1 hits 0 mod p at n=(p-1)/2.
    case SequenceKind::double_factorial: return (p - 3) / 2;
  }
  return 0;
}

void PrimeContext::require_window(const Window& w) const {
  if (w.n == 0)
    fail(errc::window_out_of_range, "window length N must be positive");
  if (w.h + w.n > max_sequence_arg())
    fail(errc::window_out_of_range,
         "window (H=" + std::to_string(w.h) + ", N=" + std::to_string(w.n) +
             ") needs H+N <= " + std::to_string(max_sequence_arg()) +
             " for kind " + to_string(kind) + " at p=" + std::to_string(p));
}

PrimeContext build_context(std::uint64_t p, SequenceKind kind) {
  if (p < 3 || p % 2 == 0)
    fail(errc::even_or_too_small,
         "p=" + std::to_string(p) + " must be an odd prime >= 3");
  if (p >= (1ull << 31))
    fail(errc::not_supported, "p=" + std::to_string(p) + " exceeds 2^31 cap");
  if (!is_prime_u64(p))
    fail(errc::not_prime, "p=" + std::to_string(p) + " is not prime");

  PrimeContext ctx;
  ctx.p = p;
  ctx.kind = kind;

  const auto qs = prime_factors(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (std::uint64_t q : qs) {
      if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
    }
    if (ok) { ctx.g = g; break; }
  }

  ctx.ind.assign(p, 0);
  ctx.pow.assign(p - 1, 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < p - 1; ++k) {
    ctx.pow[k] = static_cast<std::uint32_t>(x);
    ctx.ind[x] = static_cast<std::uint32_t>(k);
    x = x * ctx.g % p;
  }
  ctx.ind[0] = static_cast<std::uint32_t>(p - 1);  // poison, never a valid index
  return ctx;
}

std::vector<std::uint64_t> sequence_prefix(const PrimeContext& ctx,
                                           std::uint64_t n_max) {
  if (n_max > ctx.max_sequence_arg())
    fail(errc::window_out_of_range,
         "n=" + std::to_string(n_max) + " exceeds the valid range of " +
             to_string(ctx.kind) + " mod " + std::to_string(ctx.p));
  const std::uint64_t p = ctx.p;
  std::vector<std::uint64_t> u(n_max + 1);
  u[0] = 1;
  switch (ctx.kind) {
    case SequenceKind::factorial:
      for (std::uint64_t n = 1; n <= n_max; ++n) u[n] = u[n - 1] * n % p;
      break;
    case SequenceKind::central_binomial: {
      // binom(2n,n) = binom(2n-2,n-1) * 2(2n-1)/n; batch the inverses.
      std::vector<std::uint64_t> inv(n_max + 1);
      if (n_max >= 1) inv[1] = 1;
      for (std::uint64_t i = 2; i <= n_max; ++i)
        inv[i] = (p - (p / i) * inv[p % i] % p) % p;
      for (std::uint64_t n = 1; n <= n_max; ++n)
        u[n] = u[n - 1] % p * (2 * (2 * n - 1) % p) % p * inv[n] % p;
      break;
    }
    case SequenceKind::double_factorial:
      for (std::uint64_t n = 1; n <= n_max; ++n)
        u[n] = u[n - 1] * ((2 * n + 1) % p) % p;
      break;
  }
  return u;
}

std::vector<std::uint64_t> sequence_residues(const PrimeContext& ctx,
                                             const Window& w) {
  ctx.require_window(w);
  auto prefix = sequence_prefix(ctx, w.h + w.n);
  return {prefix.begin() + static_cast<std::ptrdiff_t>(w.h + 1), prefix.end()};
}

int legendre(const PrimeContext& ctx, std::uint64_t x) {
  x %= ctx.p;
  if (x == 0) return 0;
  return (ctx.ind[x] & 1) ? -1 : 1;
}

}  // namespace factmod
