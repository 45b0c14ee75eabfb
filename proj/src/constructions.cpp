#include "factmod/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "factmod/dft.hpp"
#include "factmod/exactconv.hpp"
#include "factmod/parallel.hpp"

namespace factmod {

namespace {

void require_factorial_kind(const PrimeContext& ctx, const char* op) {
  if (ctx.kind != SequenceKind::factorial)
    fail(errc::not_supported,
         std::string(op) + " is defined for factorial sequences");
}

// n! mod p for n = 0..p-1 regardless of the context's window rules.
std::vector<std::uint64_t> full_factorials(const PrimeContext& ctx) {
  std::vector<std::uint64_t> f(ctx.p);
  f[0] = 1;
  for (std::uint64_t n = 1; n < ctx.p; ++n) f[n] = f[n - 1] * n % ctx.p;
  return f;
}

bool is_primroot_index(const PrimeContext& ctx, std::uint64_t value) {
  if (value == 0) return false;
  return std::gcd<std::uint64_t>(ctx.ind[value], ctx.p - 1) == 1;
}

}  // namespace

WilsonPair wilson_pair(const PrimeContext& ctx, std::uint64_t b) {
  require_factorial_kind(ctx, "wilson_pair");
  if (b < 1 || b > ctx.p - 1)
    fail(errc::out_of_range, "b=" + std::to_string(b) + " outside 1..p-1");
  auto f = full_factorials(ctx);
  WilsonPair out;
  out.b = b;
  out.product = f[b] * f[ctx.p - 1 - b] % ctx.p;
  out.sign = (b % 2 == 0) ? -1 : 1;  // (-1)^{b+1}
  std::uint64_t expect = out.sign == 1 ? 1 : ctx.p - 1;
  if (out.product != expect)
    throw internal_error("wilson_pair identity failed at p=" +
                         std::to_string(ctx.p) + ", b=" + std::to_string(b));
  return out;
}

WilsonWitness wilson_representation(const PrimeContext& ctx, std::uint64_t a) {
  require_factorial_kind(ctx, "wilson_representation");
  if (a < 1 || a > ctx.p - 1)
    fail(errc::out_of_range, "a=" + std::to_string(a) + " outside 1..p-1");
  const std::uint64_t p = ctx.p;
  auto f = full_factorials(ctx);
  WilsonWitness out;
  out.a = a;
  out.b = invmod(a, p);
  out.r_b = static_cast<unsigned>((out.b + 1) % 2);
  std::uint64_t prod = f[out.b - 1] * f[p - 1 - out.b] % p;
  if (out.r_b == 1) prod = prod * f[p - 1] % p;
  out.product = prod;
  if (out.product != a)
    throw internal_error("wilson_representation failed at p=" +
                         std::to_string(p) + ", a=" + std::to_string(a));
  return out;
}

SpacingReport nonresidue_spacings(const PrimeContext& ctx,
                                  std::uint64_t j_count) {
  require_factorial_kind(ctx, "nonresidue_spacings");
  const std::uint64_t p = ctx.p;
  if (j_count < 1 || j_count > (p - 1) / 2)
    fail(errc::out_of_range,
         "J=" + std::to_string(j_count) + " outside 1..(p-1)/2");
  SpacingReport out;
  out.p = p;
  out.j_count = j_count;
  std::uint64_t prev = 0, found = 0;
  for (std::uint64_t n = 1; n < p && found < j_count; ++n) {
    if (legendre(ctx, n) == -1) {
      ++found;
      out.gaps.push_back(n - prev);
      prev = n;
    }
  }
  out.n_j = prev;
  std::int64_t alt = 0;
  for (std::size_t j = 0; j < out.gaps.size(); ++j) {
    std::int64_t d = static_cast<std::int64_t>(out.gaps[j]);
    alt += (j % 2 == 0) ? d : -d;  // (-1)^{j-1} with 1-based j
  }
  out.alt_sum = alt;
  std::int64_t lsum = 0;
  std::uint64_t fac = 1;
  for (std::uint64_t n = 0; n < out.n_j; ++n) {
    if (n > 0) fac = fac * n % p;
    lsum += legendre(ctx, fac);
  }
  out.legendre_sum = lsum;
  return out;
}

PrimrootHit find_primroot_factorial(const PrimeContext& ctx) {
  PrimrootHit out;
  auto prefix = sequence_prefix(ctx, ctx.max_sequence_arg());
  for (std::uint64_t n = 1; n < prefix.size(); ++n) {
    if (is_primroot_index(ctx, prefix[n])) {
      out.found = true;
      out.n = n;
      out.ratio = static_cast<double>(n) / std::sqrt(static_cast<double>(ctx.p));
      return out;
    }
  }
  return out;
}

std::uint64_t count_Q(const PrimeContext& ctx, const Window& w) {
  auto res = sequence_residues(ctx, w);
  std::uint64_t q = 0;
  for (std::uint64_t v : res) q += is_primroot_index(ctx, v) ? 1 : 0;
  return q;
}

std::uint64_t count_Qm(const PrimeContext& ctx, std::uint64_t m, const Window& w) {
  if (m < 1) fail(errc::out_of_range, "m must be >= 1");
  ctx.require_window(w);
  const std::uint64_t last_needed = w.h + w.n + m - 1;
  const std::uint64_t avail = std::min(last_needed, ctx.max_sequence_arg());
  auto prefix = sequence_prefix(ctx, avail);
  // good[n] = 1 when u(n) is a primitive root; arguments past the valid
  // range have u divisible by p, which disqualifies them outright.
  std::uint64_t count = 0;
  for (std::uint64_t n = w.h + 1; n <= w.h + w.n; ++n) {
    bool all = true;
    for (std::uint64_t i = 0; i < m && all; ++i) {
      std::uint64_t arg = n + i;
      all = arg <= avail && is_primroot_index(ctx, prefix[arg]);
    }
    count += all ? 1 : 0;
  }
  return count;
}

PowerClassReport classify_power_residues(const PrimeContext& ctx,
                                         const std::vector<std::uint64_t>& subset,
                                         const Window& w) {
  auto qs = prime_factors(ctx.p - 1);
  for (std::uint64_t q : subset) {
    if (std::find(qs.begin(), qs.end(), q) == qs.end())
      fail(errc::invalid_subset,
           "q=" + std::to_string(q) + " is not a prime divisor of p-1");
    if (std::count(subset.begin(), subset.end(), q) > 1)
      fail(errc::invalid_subset, "q=" + std::to_string(q) + " repeats");
  }
  auto res = sequence_residues(ctx, w);
  PowerClassReport out;
  out.subset = subset;
  std::sort(out.subset.begin(), out.subset.end());
  std::uint64_t count = 0;
  for (std::uint64_t v : res) {
    std::uint64_t idx = ctx.ind[v];
    bool match = true;
    for (std::uint64_t q : qs) {
      bool divides = idx % q == 0;
      bool wanted = std::find(subset.begin(), subset.end(), q) != subset.end();
      if (divides != wanted) { match = false; break; }
    }
    count += match ? 1 : 0;
  }
  out.count = count;
  double main = static_cast<double>(w.n);
  for (std::uint64_t q : qs) {
    bool in_r = std::find(subset.begin(), subset.end(), q) != subset.end();
    main *= in_r ? 1.0 / static_cast<double>(q)
                 : (static_cast<double>(q) - 1.0) / static_cast<double>(q);
  }
  out.main_term = main;
  return out;
}

V2WitnessReport v2_witness_count(const PrimeContext& ctx) {
  require_factorial_kind(ctx, "v2_witness_count");
  const std::uint64_t p = ctx.p;
  V2WitnessReport out;
  std::uint64_t w = 0;
  for (std::uint64_t u = 0; u <= (p - 3) / 2; ++u) {
    std::uint64_t t = 2 * u % p * ((2 * u + 1) % p) % p;
    if (t % 2 == 0 && t <= p - 3) ++w;  // t = 2v with v <= (p-3)/2
  }
  out.w_count = w;
  out.lower_bound = static_cast<double>(p - 1) / 2.0 +
                    static_cast<double>(w) / 2.0;
  out.w_over_quarter_p = static_cast<double>(w) /
                         (static_cast<double>(p) / 4.0);
  return out;
}

DistinctScanRecord distinct_factorial_check(std::uint64_t p) {
  auto ctx = build_context(p, SequenceKind::factorial);
  auto f = full_factorials(ctx);
  DistinctScanRecord rec;
  rec.p = p;
  std::vector<bool> seen(p, false);
  bool distinct = true;
  for (std::uint64_t n = 2; n <= p - 1 && distinct; ++n) {
    if (seen[f[n]]) distinct = false;
    seen[f[n]] = true;
  }
  rec.is_distinct = distinct;
  if (distinct) {
    // p-2 distinct nonzero values among p-1 classes: exactly one is missing.
    std::uint64_t missing = 0;
    for (std::uint64_t v = 1; v < p; ++v) {
      if (!seen[v]) missing = v;
    }
    rec.missing_residue = missing;
    std::uint64_t predicted = (p - f[(p - 1) / 2]) % p;  // -((p-1)/2)!
    rec.missing_matches_prediction = missing == predicted;
    rec.mod8_matches_prediction = p % 8 == 5;
  }
  return rec;
}

std::vector<DistinctScanRecord> distinct_factorial_scan(std::uint64_t lo,
                                                        std::uint64_t hi,
                                                        unsigned jobs) {
  if (lo < 3 || lo > hi)
    fail(errc::bad_range, "scan range must satisfy 3 <= lo <= hi");
  auto ps = primes_in_range(lo, hi);
  return parallel_map<DistinctScanRecord>(
      ps.size(), jobs, [&](std::size_t i) {
        return distinct_factorial_check(ps[i]);
      });
}

std::optional<std::vector<std::uint64_t>> search_representation(
    const PrimeContext& ctx, std::uint64_t a, unsigned ell,
    std::uint64_t max_n) {
  require_factorial_kind(ctx, "search_representation");
  if (ell < 1 || ell > 8)
    fail(errc::ell_out_of_range, "ell=" + std::to_string(ell) + " outside 1..8");
  if (a < 1 || a > ctx.p - 1)
    fail(errc::out_of_range, "a=" + std::to_string(a) + " outside 1..p-1");
  if (max_n < 1 || max_n > ctx.p - 1)
    fail(errc::out_of_range, "max_n outside 1..p-1");

  const std::uint64_t p = ctx.p, L = p - 1;
  auto prefix = sequence_prefix(ctx, max_n);
  std::vector<std::uint8_t> single(L, 0);
  for (std::uint64_t n = 1; n <= max_n; ++n) single[ctx.ind[prefix[n]]] = 1;

  // reach[k][t] = 1 iff some product of k factorials lands on index t.
  std::vector<std::vector<std::uint8_t>> reach(ell);
  if (ell >= 2) {
    reach[1] = single;
    for (unsigned k = 2; k < ell; ++k)
      reach[k] = cyclic_power_support(single, k);
  }

  std::uint64_t target = ctx.ind[a];
  std::vector<std::uint64_t> tuple;
  for (unsigned slot = 0; slot < ell; ++slot) {
    const unsigned remaining = ell - slot - 1;
    bool advanced = false;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      std::uint64_t idx = ctx.ind[prefix[n]];
      std::uint64_t rest = (target + L - idx % L) % L;
      bool feasible = remaining == 0 ? rest == 0 : reach[remaining][rest] != 0;
      if (feasible) {
        tuple.push_back(n);
        target = rest;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }

  std::uint64_t check = 1;
  for (std::uint64_t n : tuple) check = check * prefix[n] % p;
  if (check != a)
    throw internal_error("representation search produced an invalid tuple");
  return tuple;
}

GuyF11Report guy_f11_report(std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
  if (lo < 3 || lo > hi)
    fail(errc::bad_range, "range must satisfy 3 <= lo <= hi");
  auto ps = primes_in_range(lo, hi);
  GuyF11Report out;
  out.target = 1.0 - std::exp(-1.0);
  out.rows = parallel_map<GuyF11Row>(ps.size(), jobs, [&](std::size_t i) {
    const std::uint64_t p = ps[i];
    std::vector<bool> seen(p, false);
    std::uint64_t fac = 1, v1 = 0;
    for (std::uint64_t n = 1; n < p; ++n) {
      fac = fac * n % p;
      if (!seen[fac]) { seen[fac] = true; ++v1; }
    }
    GuyF11Row row;
    row.p = p;
    row.v1 = v1;
    row.ratio = static_cast<double>(v1) / static_cast<double>(p);
    return row;
  });
  if (!out.rows.empty()) {
    KahanSum mean_acc;
    for (const auto& r : out.rows) mean_acc.add(r.ratio);
    out.mean = mean_acc.value() / static_cast<double>(out.rows.size());
    KahanSum var_acc;
    for (const auto& r : out.rows) {
      double d = r.ratio - out.mean;
      var_acc.add(d * d);
    }
    out.stddev = std::sqrt(var_acc.value() /
                           static_cast<double>(out.rows.size()));
  }
  return out;
}

}  // namespace factmod
