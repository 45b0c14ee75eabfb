#include "factmod/boundbench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "factmod/charspectrum.hpp"
#include "factmod/constructions.hpp"
#include "factmod/momentlab.hpp"
#include "factmod/parallel.hpp"
#include "factmod/repcount.hpp"

namespace factmod {

namespace {

struct KindName {
  BoundKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {BoundKind::T_individual, "T_individual"},
    {BoundKind::T_secondmoment, "T_secondmoment"},
    {BoundKind::S_secondmoment, "S_secondmoment"},
    {BoundKind::I_moment, "I_moment"},
    {BoundKind::I_asymptotic, "I_asymptotic"},
    {BoundKind::F_uniform, "F_uniform"},
    {BoundKind::V_valueset, "V_valueset"},
    {BoundKind::D_discrepancy, "D_discrepancy"},
    {BoundKind::G_fixedsum, "G_fixedsum"},
    {BoundKind::F_max, "F_max"},
    {BoundKind::V2_lower, "V2_lower"},
    {BoundKind::spacing_altsum, "spacing_altsum"},
    {BoundKind::Q_primroot, "Q_primroot"},
    {BoundKind::polya_vinogradov, "polya_vinogradov"},
    {BoundKind::J_moment, "J_moment"},
};

double dlog(std::uint64_t x) { return std::log(static_cast<double>(x)); }
double dpow(std::uint64_t x, double e) {
  return std::pow(static_cast<double>(x), e);
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(errc::domain_violation, what);
}

double to_double(const CountScalar& x) { return x.get_d(); }

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

const char* to_string(BoundKind kind) {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "?";
}

BoundKind bound_kind_from_string(const std::string& name) {
  for (const auto& kn : kKindNames)
    if (name == kn.name) return kn.kind;
  fail(errc::not_supported, "unknown bound kind '" + name + "'");
}

std::vector<BoundKind> all_bound_kinds() {
  std::vector<BoundKind> out;
  for (const auto& kn : kKindNames) out.push_back(kn.kind);
  return out;
}

double eval_bound(BoundKind kind, const BoundParams& q) {
  const std::uint64_t p = q.p, n = q.n;
  const double l = q.ell, r = q.r;
  require(p >= 3, "p must be >= 3");
  switch (kind) {
    case BoundKind::T_individual:
      return dpow(n, 0.75) * dpow(p, 0.125) * std::pow(dlog(p), 0.25);
    case BoundKind::T_secondmoment:
    case BoundKind::S_secondmoment:
      return static_cast<double>(p) * dpow(n, 1.5);
    case BoundKind::I_moment:
      require(q.ell >= 1, "ell >= 1");
      return dpow(n, 2.0 * l - 1.0 + std::pow(2.0, -l));
    case BoundKind::I_asymptotic:
      require(q.ell >= q.r && q.r >= 1, "needs ell >= r >= 1");
      return dpow(n, 1.5 * l + 0.5 * r - 1.0 + std::pow(2.0, -r)) *
             dpow(p, (l - r) / 4.0) * std::pow(dlog(p), (l - r) / 2.0);
    case BoundKind::F_uniform:
      require(q.ell >= 2 * q.r && q.r >= 1, "needs ell >= 2r >= 1");
      return dpow(n, 0.75 * l + 0.5 * r - 1.0 + std::pow(2.0, -r)) *
             dpow(p, (l - 2.0 * r) / 8.0) *
             std::pow(dlog(p), (l - 2.0 * r) / 4.0);
    case BoundKind::V_valueset:
      require(q.ell >= q.r && q.r >= 1, "needs ell >= r >= 1");
      return dpow(n, -0.5 * l + 0.5 * r - 1.0 + std::pow(2.0, -r)) *
             dpow(p, (l - r + 8.0) / 4.0) * std::pow(dlog(p), (l - r) / 2.0);
    case BoundKind::D_discrepancy:
      require(q.ell >= 2 * q.r && q.r >= 1, "needs ell >= 2r >= 1");
      return dpow(n, -0.25 * l + 0.5 * r - 1.0 + std::pow(2.0, -r)) *
             dpow(p, (l - 2.0 * r + 4.0) / 8.0) *
             std::pow(dlog(p), (l - 2.0 * r + 4.0) / 4.0);
    case BoundKind::G_fixedsum:
      require(q.ell >= 1 && n >= 1 && n * q.ell < p, "needs 1 <= N < p/ell");
      return dpow(n, 0.75 * l) * dpow(p, (l + 6.0) / 8.0) *
             std::pow(dlog(p), (l - 2.0) / 4.0);
    case BoundKind::F_max:
      return dpow(n, 2.0 / 3.0);
    case BoundKind::V2_lower:
      return dpow(p, 0.5) * dlog(p) * dlog(p);
    case BoundKind::spacing_altsum:
      require(q.j_gaps >= 1 && q.j_gaps <= (p - 1) / 2,
              "needs 1 <= J <= (p-1)/2");
      return dpow(q.j_gaps, 0.75) * dpow(p, 0.125) * std::pow(dlog(p), 0.25);
    case BoundKind::Q_primroot:
      return dpow(n, 0.75) * dpow(p, 0.125 + q.eps);
    case BoundKind::polya_vinogradov:
      return dpow(p, 0.5) * dlog(p);
    case BoundKind::J_moment:
      require(q.ell >= 1, "ell >= 1");
      return dpow(n, 2.0 * l - 1.0 + 1.0 / (l + 1.0));
  }
  fail(errc::not_supported, "unhandled bound kind");
}

std::optional<double> eval_main_term(BoundKind kind, const BoundParams& q) {
  switch (kind) {
    case BoundKind::I_asymptotic:
      return dpow(q.n, 2.0 * q.ell) / static_cast<double>(q.p - 1);
    case BoundKind::F_uniform:
      return dpow(q.n, q.ell) / static_cast<double>(q.p - 1);
    case BoundKind::V_valueset:
      return static_cast<double>(q.p);
    case BoundKind::G_fixedsum: {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), q.n - 1, q.ell - 1);
      return b.get_d() / static_cast<double>(q.p - 1);
    }
    case BoundKind::V2_lower:
      return 0.625 * static_cast<double>(q.p);
    case BoundKind::Q_primroot: {
      std::uint64_t phi = q.p - 1;
      for (std::uint64_t f : prime_factors(q.p - 1)) phi = phi / f * (f - 1);
      return static_cast<double>(q.n) * static_cast<double>(phi) /
             static_cast<double>(q.p - 1);
    }
    default:
      return std::nullopt;
  }
}

namespace {

BoundReport measure_one(BoundKind kind, std::uint64_t p, BoundParams q) {
  q.p = p;
  if (!q.explicit_window) {
    q.h = 0;
    q.n = kind == BoundKind::G_fixedsum ? (p - 1) / q.ell : p - 1;
    if (q.n == 0) q.n = 1;
  }
  if (kind == BoundKind::spacing_altsum && q.j_gaps == 0)
    q.j_gaps = (p - 1) / 2;

  BoundReport rep;
  rep.kind = kind;
  rep.p = p;
  rep.h = q.h;
  rep.n = q.n;
  rep.ell = q.ell;
  rep.r = q.r;

  auto ctx = build_context(p);
  const Window w{q.h, q.n};

  auto set_exact = [&rep](const CountScalar& v) {
    rep.lhs = v.get_str();
    rep.lhs_value = to_double(v);
  };
  auto set_float = [&rep](double v) {
    rep.lhs = fmt17(v);
    rep.lhs_value = v;
  };

  switch (kind) {
    case BoundKind::T_individual: {
      auto spec = spectrum_T(ctx, {}, w);
      double best = 0.0;
      for (std::size_t j = 1; j < spec.size(); ++j)
        best = std::max(best, std::abs(spec[j]));
      set_float(best);
      break;
    }
    case BoundKind::T_secondmoment:
      set_exact(count_I(ctx, w, 1) * CountScalar(static_cast<unsigned long>(p - 1)));
      break;
    case BoundKind::S_secondmoment:
      set_exact(count_J(ctx, w, 1) * CountScalar(static_cast<unsigned long>(p)));
      break;
    case BoundKind::I_moment:
    case BoundKind::I_asymptotic:
      set_exact(count_I(ctx, w, q.ell));
      break;
    case BoundKind::F_uniform: {
      auto t = table_F(ctx, w, q.ell);
      // max_a |F(a) - N^ell/(p-1)| evaluated exactly over denominator p-1
      CountScalar n_ell = 1;
      for (unsigned i = 0; i < q.ell; ++i)
        n_ell *= CountScalar(static_cast<unsigned long>(q.n));
      CountScalar best = 0;
      for (std::uint64_t a = 1; a < p; ++a) {
        CountScalar dev = t.by_residue[a] * static_cast<unsigned long>(p - 1) -
                          n_ell;
        if (dev < 0) dev = -dev;
        if (dev > best) best = dev;
      }
      set_float(to_double(best) / static_cast<double>(p - 1));
      break;
    }
    case BoundKind::V_valueset:
      set_exact(CountScalar(static_cast<unsigned long>(value_set_V(ctx, w, q.ell))));
      break;
    case BoundKind::D_discrepancy: {
      auto t = table_F(ctx, w, q.ell);
      if (q.a) {
        set_float(discrepancy_from_table(ctx, *q.a, t).d);
      } else {
        double best = 0.0;
        for (std::uint64_t a = 1; a < p; ++a)
          best = std::max(best, discrepancy_from_table(ctx, a, t).d);
        set_float(best);
      }
      break;
    }
    case BoundKind::G_fixedsum: {
      // max_a |G(a,N) - binom(N-1,ell-1)/(p-1)|, denominator p-1 exact
      mpz_class bin;
      mpz_bin_uiui(bin.get_mpz_t(), q.n - 1, q.ell - 1);
      auto g = table_G(ctx, q.n, q.ell);
      CountScalar best = 0;
      for (std::uint64_t a = 1; a < p; ++a) {
        CountScalar dev = g[a] * static_cast<unsigned long>(p - 1) - bin;
        if (dev < 0) dev = -dev;
        if (dev > best) best = dev;
      }
      set_float(to_double(best) / static_cast<double>(p - 1));
      break;
    }
    case BoundKind::F_max:
      set_exact(max_F1(ctx, w).count);
      break;
    case BoundKind::V2_lower:
      set_exact(CountScalar(static_cast<unsigned long>(
          value_set_V(ctx, Window{0, p - 1}, 2))));
      break;
    case BoundKind::spacing_altsum: {
      auto sp = nonresidue_spacings(ctx, q.j_gaps);
      set_float(std::abs(static_cast<double>(sp.alt_sum)));
      break;
    }
    case BoundKind::Q_primroot:
      set_exact(CountScalar(static_cast<unsigned long>(count_Q(ctx, w))));
      break;
    case BoundKind::polya_vinogradov:
      set_float(max_incomplete_char_sum(ctx));
      break;
    case BoundKind::J_moment:
      set_exact(count_J(ctx, w, q.ell));
      break;
  }

  rep.rhs = eval_bound(kind, q);
  auto main = eval_main_term(kind, q);
  rep.main_term = main.value_or(0.0);
  // F_uniform and G_fixedsum measure max_a |count - main| directly, so their
  // lhs already has the main term subtracted.
  const bool deviation_lhs =
      kind == BoundKind::F_uniform || kind == BoundKind::G_fixedsum;
  rep.ratio =
      (deviation_lhs ? rep.lhs_value : std::abs(rep.lhs_value - rep.main_term)) /
      rep.rhs;
  return rep;
}

}  // namespace

std::vector<BoundReport> ratio_sweep(BoundKind kind,
                                     const std::vector<std::uint64_t>& primes,
                                     const BoundParams& params, unsigned jobs) {
  return parallel_map<BoundReport>(primes.size(), jobs, [&](std::size_t i) {
    return measure_one(kind, primes[i], params);
  });
}

}  // namespace factmod
