#include "factmod/repcount.hpp"

#include <algorithm>

#include "factmod/exactconv.hpp"
#include "factmod/momentlab.hpp"

namespace factmod {

RepresentationTable table_F(const PrimeContext& ctx, const Window& w,
                            unsigned ell) {
  require_ell(ell);
  auto h = histogram(ctx, w, Domain::multiplicative);
  auto conv = cyclic_power(h.counts, ell);
  RepresentationTable t;
  t.p = ctx.p;
  t.ell = ell;
  t.window = w;
  t.by_residue.assign(ctx.p, CountScalar(0));
  for (std::uint64_t k = 0; k < ctx.p - 1; ++k)
    t.by_residue[ctx.pow[k]] = std::move(conv[k]);
  return t;
}

std::uint64_t value_set_V(const PrimeContext& ctx, const Window& w,
                          unsigned ell) {
  auto t = table_F(ctx, w, ell);
  std::uint64_t v = 0;
  for (const auto& c : t.by_residue)
    if (c > 0) ++v;
  return v;
}

MaxF1 max_F1(const PrimeContext& ctx, const Window& w) {
  auto res = sequence_residues(ctx, w);
  std::vector<std::uint64_t> counts(ctx.p, 0);
  for (std::uint64_t v : res) ++counts[v];
  MaxF1 best;
  best.a = 0;
  best.count = 0;
  for (std::uint64_t a = 1; a < ctx.p; ++a) {
    if (counts[a] > best.count) {
      best.a = a;
      best.count = static_cast<unsigned long>(counts[a]);
    }
  }
  return best;
}

std::vector<CountScalar> table_G(const PrimeContext& ctx, std::uint64_t n,
                                 unsigned ell, bool lift_sum_cap) {
  require_ell(ell);
  if (ctx.kind != SequenceKind::factorial)
    fail(errc::not_supported, "count_G is defined for factorial sequences");
  if (n < 1) fail(errc::bad_range, "N must be >= 1");
  if (!lift_sum_cap && n * ell >= ctx.p)
    fail(errc::window_out_of_range,
         "N=" + std::to_string(n) + " violates N < p/ell; pass the lift flag "
         "to count with exact integer sums anyway");
  const std::uint64_t p = ctx.p;
  if (n < ell) return std::vector<CountScalar>(p, CountScalar(0));

  const std::uint64_t kmax = n - ell + 1;  // largest single part
  // parts k >= p contribute k! == 0 mod p
  std::vector<std::uint64_t> fac(kmax + 1);
  fac[0] = 1;
  for (std::uint64_t k = 1; k <= kmax; ++k)
    fac[k] = k < p ? fac[k - 1] * (k % p) % p : 0;

  // dp[s][r]: tuples so far with part sum s and factorial product r mod p.
  // One rolling layer per tuple slot keeps memory at O(N p).
  std::vector<std::vector<CountScalar>> dp(
      n + 1, std::vector<CountScalar>(p, CountScalar(0)));
  for (std::uint64_t k = 1; k <= kmax; ++k) dp[k][fac[k]] += 1;
  for (unsigned t = 2; t <= ell; ++t) {
    std::vector<std::vector<CountScalar>> next(
        n + 1, std::vector<CountScalar>(p, CountScalar(0)));
    for (std::uint64_t s = t - 1; s <= n; ++s) {
      for (std::uint64_t r = 0; r < p; ++r) {
        if (dp[s][r] == 0) continue;
        for (std::uint64_t k = 1; k <= kmax && s + k <= n; ++k) {
          std::uint64_t r2 = r * fac[k] % p;
          next[s + k][r2] += dp[s][r];
        }
      }
    }
    dp = std::move(next);
  }
  return std::move(dp[n]);
}

CountScalar count_G(const PrimeContext& ctx, std::uint64_t a, std::uint64_t n,
                    unsigned ell, bool lift_sum_cap) {
  if (a >= ctx.p)
    fail(errc::out_of_range, "a=" + std::to_string(a) + " outside 0..p-1");
  return table_G(ctx, n, ell, lift_sum_cap)[a];
}

namespace {

void reduce_fraction(CountScalar& num, CountScalar& den) {
  CountScalar g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

double fraction_to_double(const CountScalar& num, const CountScalar& den) {
  mpq_class q(num, den);
  return q.get_d();
}

}  // namespace

DiscrepancyResult discrepancy_D(const PrimeContext& ctx, std::uint64_t a,
                                const Window& w, unsigned ell) {
  return discrepancy_from_table(ctx, a, table_F(ctx, w, ell));
}

DiscrepancyResult discrepancy_from_table(const PrimeContext& ctx,
                                         std::uint64_t a,
                                         const RepresentationTable& t) {
  const std::uint64_t p = ctx.p;
  if (a == 0 || a >= p)
    fail(errc::non_invertible_multiplier,
         "a=" + std::to_string(a) + " must be invertible mod p");

  // weight[c] = multiplicity of the point c/p; position c = a * v mod p.
  std::vector<CountScalar> weight(p, CountScalar(0));
  for (std::uint64_t v = 1; v < p; ++v) {
    if (t.by_residue[v] == 0) continue;
    weight[a * v % p] += t.by_residue[v];
  }
  CountScalar mass = 0;  // N^ell
  for (const auto& c : weight) mass += c;

  // Candidates over the grid c = 0..p (position c/p, boundaries included).
  // Surplus of closed [c_i/p, c_j/p]:   (pref(j)-pref(i-1))/M - (j-i)/p
  // Deficit of open   (c_i/p, c_j/p):   (j-i)/p - (pref(j-1)-pref(i))/M
  // Both scanned in one pass over the common denominator M*p.
  std::vector<CountScalar> pref(p + 2, CountScalar(0));  // pref[c+1] = sum_{<=c}
  for (std::uint64_t c = 0; c < p; ++c) pref[c + 1] = pref[c] + weight[c];
  pref[p + 1] = pref[p];

  CountScalar best_num = 0;
  std::uint64_t best_lo = 0, best_hi = 0;

  CountScalar min_s;  // min over i <= j of pref(i-1)*p - c_i*M
  std::uint64_t min_s_at = 0;
  CountScalar min_u;  // min over i < j of c_i*M - pref(i)*p
  std::uint64_t min_u_at = 0;
  for (std::uint64_t c = 0; c <= p; ++c) {
    CountScalar s = pref[c] * static_cast<unsigned long>(p) -
                    mass * static_cast<unsigned long>(c);
    if (c == 0 || s < min_s) {
      min_s = s;
      min_s_at = c;
    }
    CountScalar surplus = pref[c + 1] * static_cast<unsigned long>(p) -
                          mass * static_cast<unsigned long>(c) - min_s;
    if (surplus > best_num) {
      best_num = surplus;
      best_lo = min_s_at;
      best_hi = c;
    }
    if (c > 0) {
      CountScalar deficit = mass * static_cast<unsigned long>(c) -
                            pref[c] * static_cast<unsigned long>(p) - min_u;
      if (deficit > best_num) {
        best_num = deficit;
        best_lo = min_u_at;
        best_hi = c;
      }
    }
    CountScalar u = mass * static_cast<unsigned long>(c) -
                    pref[c + 1] * static_cast<unsigned long>(p);
    if (c == 0 || u < min_u) {
      min_u = u;
      min_u_at = c;
    }
  }

  DiscrepancyResult r;
  r.a = a;
  r.ell = t.ell;
  r.num = best_num;
  r.den = mass * static_cast<unsigned long>(p);
  reduce_fraction(r.num, r.den);
  r.d = fraction_to_double(r.num, r.den);
  r.alpha = static_cast<double>(best_lo) / static_cast<double>(p);
  r.beta = static_cast<double>(best_hi) / static_cast<double>(p);
  return r;
}

cplx exp_sum_product(const PrimeContext& ctx, std::uint64_t a, const Window& w,
                     unsigned ell) {
  if (a >= ctx.p)
    fail(errc::out_of_range, "a=" + std::to_string(a) + " outside 0..p-1");
  auto t = table_F(ctx, w, ell);
  KahanComplex acc;
  for (std::uint64_t c = 1; c < ctx.p; ++c) {
    if (t.by_residue[c] == 0) continue;
    double weight = t.by_residue[c].get_d();
    acc.add(unit_phase(a * c % ctx.p, ctx.p) * weight);
  }
  return acc.value();
}

}  // namespace factmod
