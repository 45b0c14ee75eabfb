#include "factmod/refcheck.hpp"

#include <algorithm>
#include <map>

namespace factmod {
namespace refcheck {

namespace {

constexpr double kEnumCap = 1e8;

void require_enum(double size, const char* op) {
  if (size > kEnumCap)
    fail(errc::too_large,
         std::string(op) + ": enumeration size exceeds the 1e8 oracle cap");
}

void require_ell_oracle(unsigned ell) {
  if (ell < 1 || ell > 8)
    fail(errc::ell_out_of_range, "ell=" + std::to_string(ell) + " outside 1..8");
}

// Walks every ell-tuple of window residues, calling visit(product, value sum).
template <typename Visit>
void enumerate_tuples(const std::vector<std::uint64_t>& res, std::uint64_t p,
                      unsigned ell, Visit visit) {
  std::vector<std::size_t> pos(ell, 0);
  for (;;) {
    std::uint64_t prod = 1, sum = 0;
    for (unsigned i = 0; i < ell; ++i) {
      prod = prod * res[pos[i]] % p;
      sum = (sum + res[pos[i]]) % p;
    }
    visit(prod, sum);
    unsigned i = 0;
    while (i < ell) {
      if (++pos[i] < res.size()) break;
      pos[i] = 0;
      ++i;
    }
    if (i == ell) return;
  }
}

double pow_size(std::uint64_t n, unsigned e) {
  double s = 1;
  for (unsigned i = 0; i < e; ++i) s *= static_cast<double>(n);
  return s;
}

}  // namespace

CountScalar oracle_I(const PrimeContext& ctx, const Window& w, unsigned ell) {
  require_ell_oracle(ell);
  require_enum(pow_size(w.n, 2 * ell), "oracle_I");
  auto res = sequence_residues(ctx, w);
  // count pairs of ell-tuples with equal products via a product tally
  std::map<std::uint64_t, CountScalar> tally;
  enumerate_tuples(res, ctx.p, ell,
                   [&](std::uint64_t prod, std::uint64_t) { tally[prod] += 1; });
  CountScalar total = 0;
  for (const auto& [prod, count] : tally) total += count * count;
  return total;
}

CountScalar oracle_J(const PrimeContext& ctx, const Window& w, unsigned ell) {
  require_ell_oracle(ell);
  require_enum(pow_size(w.n, 2 * ell), "oracle_J");
  auto res = sequence_residues(ctx, w);
  std::map<std::uint64_t, CountScalar> tally;
  enumerate_tuples(res, ctx.p, ell,
                   [&](std::uint64_t, std::uint64_t sum) { tally[sum] += 1; });
  CountScalar total = 0;
  for (const auto& [sum, count] : tally) total += count * count;
  return total;
}

CountScalar oracle_F(const PrimeContext& ctx, std::uint64_t a, const Window& w,
                     unsigned ell) {
  require_ell_oracle(ell);
  require_enum(pow_size(w.n, ell), "oracle_F");
  if (a >= ctx.p) fail(errc::out_of_range, "a outside 0..p-1");
  auto res = sequence_residues(ctx, w);
  CountScalar count = 0;
  enumerate_tuples(res, ctx.p, ell, [&](std::uint64_t prod, std::uint64_t) {
    if (prod == a) count += 1;
  });
  return count;
}

std::uint64_t oracle_V(const PrimeContext& ctx, const Window& w, unsigned ell) {
  require_ell_oracle(ell);
  require_enum(pow_size(w.n, ell), "oracle_V");
  auto res = sequence_residues(ctx, w);
  std::vector<bool> seen(ctx.p, false);
  enumerate_tuples(res, ctx.p, ell,
                   [&](std::uint64_t prod, std::uint64_t) { seen[prod] = true; });
  std::uint64_t v = 0;
  for (bool b : seen) v += b ? 1 : 0;
  return v;
}

CountScalar oracle_G(const PrimeContext& ctx, std::uint64_t a, std::uint64_t n,
                     unsigned ell) {
  require_ell_oracle(ell);
  if (a >= ctx.p) fail(errc::out_of_range, "a outside 0..p-1");
  if (n < 1) fail(errc::bad_range, "N must be >= 1");
  mpz_class comps;
  mpz_bin_uiui(comps.get_mpz_t(), n - 1, ell - 1);
  require_enum(comps.get_d() * static_cast<double>(ell), "oracle_G");
  // factorials of possible parts; k! == 0 mod p once k >= p
  const std::uint64_t top = std::min(n, ctx.p - 1);
  std::vector<std::uint64_t> fac(top + 1);
  fac[0] = 1;
  for (std::uint64_t k = 1; k <= top; ++k) fac[k] = fac[k - 1] * k % ctx.p;

  CountScalar count = 0;
  std::vector<std::uint64_t> parts(ell, 1);
  // iterate all compositions of n into ell positive parts
  auto product = [&]() {
    std::uint64_t prod = 1;
    for (std::uint64_t k : parts) prod = prod * (k < ctx.p ? fac[k] : 0) % ctx.p;
    return prod;
  };
  if (ell == 1) {
    parts[0] = n;
    return CountScalar(product() == a ? 1 : 0);
  }
  // odometer over the first ell-1 parts; the last part absorbs the rest
  std::uint64_t head_sum = ell - 1;
  for (;;) {
    if (head_sum <= n - 1) {
      parts[ell - 1] = n - head_sum;
      if (product() == a) count += 1;
    }
    unsigned i = 0;
    for (; i + 1 < ell; ++i) {
      if (head_sum < n - 1 && parts[i] < n) {
        ++parts[i];
        ++head_sum;
        break;
      }
      head_sum -= parts[i] - 1;
      parts[i] = 1;
    }
    if (i + 1 == ell) break;
  }
  return count;
}

OracleDiscrepancy oracle_D(const PrimeContext& ctx, std::uint64_t a,
                           const Window& w, unsigned ell) {
  require_ell_oracle(ell);
  if (a == 0 || a >= ctx.p)
    fail(errc::non_invertible_multiplier, "a must be invertible mod p");
  require_enum(pow_size(w.n, ell) * pow_size(w.n, ell), "oracle_D");
  const std::uint64_t p = ctx.p;
  auto res = sequence_residues(ctx, w);

  // the raw point multiset: positions a * prod(tuple) mod p, kept as a
  // multiplicity tally per grid slot
  std::vector<CountScalar> mult(p, CountScalar(0));
  CountScalar mass = 0;
  enumerate_tuples(res, p, ell, [&](std::uint64_t prod, std::uint64_t) {
    mult[a * prod % p] += 1;
    mass += 1;
  });

  // candidate endpoints: occupied positions plus the unit interval bounds
  std::vector<std::uint64_t> cand;
  cand.push_back(0);
  for (std::uint64_t c = 0; c < p; ++c)
    if (mult[c] != 0) cand.push_back(c);
  cand.push_back(p);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  // closed-interval mass between candidate endpoints, by direct recount
  auto closed_mass = [&](std::uint64_t lo, std::uint64_t hi) {
    CountScalar m = 0;
    for (std::uint64_t c = lo; c <= hi && c < p; ++c) m += mult[c];
    return m;
  };

  CountScalar best = 0;  // numerator over mass * p
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i; j < cand.size(); ++j) {
      const std::uint64_t lo = cand[i], hi = cand[j];
      CountScalar length_num = mass * static_cast<unsigned long>(hi - lo);
      // closed [lo/p, hi/p]
      CountScalar a_closed = closed_mass(lo, hi) * static_cast<unsigned long>(p);
      CountScalar surplus = a_closed - length_num;
      if (surplus > best) best = surplus;
      // open (lo/p, hi/p)
      if (hi > lo + 1) {
        CountScalar a_open =
            closed_mass(lo + 1, hi - 1) * static_cast<unsigned long>(p);
        CountScalar deficit = length_num - a_open;
        if (deficit > best) best = deficit;
      } else if (hi == lo + 1) {
        if (length_num > best) best = length_num;  // empty open interval
      }
    }
  }

  OracleDiscrepancy out;
  out.num = best;
  out.den = mass * static_cast<unsigned long>(p);
  CountScalar g;
  mpz_gcd(g.get_mpz_t(), out.num.get_mpz_t(), out.den.get_mpz_t());
  if (g > 1) {
    out.num /= g;
    out.den /= g;
  }
  mpq_class q(out.num, out.den);
  out.d = q.get_d();
  return out;
}

}  // namespace refcheck
}  // namespace factmod
