#include "factmod/charspectrum.hpp"

#include <algorithm>
#include <cmath>

namespace factmod {

bool PhasePolynomial::zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](std::uint64_t c) { return c == 0; });
}

std::uint64_t PhasePolynomial::degree() const {
  std::size_t d = coeffs.size();
  while (d > 1 && coeffs[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

std::uint64_t PhasePolynomial::eval(std::uint64_t n, std::uint64_t p) const {
  n %= p;
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    v = (v * n + coeffs[i] % p) % p;
  return v;
}

void PhasePolynomial::validate(std::uint64_t p) const {
  (void)p;
  if (degree() > 8)
    fail(errc::degree_out_of_range,
         "phase polynomial degree " + std::to_string(degree()) + " exceeds 8");
}

namespace {

void require_j(const PrimeContext& ctx, std::uint64_t j) {
  if (j > ctx.p - 2)
    fail(errc::j_out_of_range, "character index j=" + std::to_string(j) +
                                   " outside 0.." + std::to_string(ctx.p - 2));
}

void require_a(const PrimeContext& ctx, std::uint64_t a) {
  if (a > ctx.p - 1)
    fail(errc::out_of_range, "additive parameter a=" + std::to_string(a) +
                                 " outside 0.." + std::to_string(ctx.p - 1));
}

}  // namespace

cplx sum_T(const PrimeContext& ctx, std::uint64_t j, const PhasePolynomial& f,
           const Window& w) {
  require_j(ctx, j);
  f.validate(ctx.p);
  const std::uint64_t p = ctx.p, L = p - 1;
  auto res = sequence_residues(ctx, w);
  KahanComplex acc;
  const bool f0 = f.zero();
  for (std::uint64_t i = 0; i < w.n; ++i) {
    std::uint64_t n = w.h + 1 + i;
    cplx term = unit_phase(j * ctx.ind[res[i]] % L, L);
    if (!f0) term *= unit_phase(f.eval(n, p), p);
    acc.add(term);
  }
  return acc.value();
}

cplx sum_S(const PrimeContext& ctx, std::uint64_t a, const Window& w) {
  require_a(ctx, a);
  auto res = sequence_residues(ctx, w);
  KahanComplex acc;
  for (std::uint64_t v : res) acc.add(unit_phase(a * v % ctx.p, ctx.p));
  return acc.value();
}

std::vector<cplx> spectrum_T(const PrimeContext& ctx, const PhasePolynomial& f,
                             const Window& w) {
  f.validate(ctx.p);
  const std::uint64_t p = ctx.p, L = p - 1;
  auto res = sequence_residues(ctx, w);
  std::vector<cplx> weight(L, cplx{0, 0});
  const bool f0 = f.zero();
  for (std::uint64_t i = 0; i < w.n; ++i) {
    std::uint64_t m = ctx.ind[res[i]];
    if (f0)
      weight[m] += 1.0;
    else
      weight[m] += unit_phase(f.eval(w.h + 1 + i, p), p);
  }
  auto spec = dft_any_length(weight, +1);
  // Entry 0 is a plain sum of the weights; pin it to the compensated value.
  KahanComplex direct;
  for (const cplx& z : weight) direct.add(z);
  spec[0] = direct.value();
  return spec;
}

std::vector<cplx> spectrum_S(const PrimeContext& ctx, const Window& w) {
  const std::uint64_t p = ctx.p;
  auto res = sequence_residues(ctx, w);
  std::vector<cplx> hist(p, cplx{0, 0});
  for (std::uint64_t v : res) hist[v] += 1.0;
  auto spec = dft_any_length(hist, +1);
  spec[0] = cplx{static_cast<double>(w.n), 0.0};
  return spec;
}

namespace {

// Largest pairwise distance among the prefix-sum points; done on the convex
// hull so the quadratic pair scan only sees hull vertices.
double point_set_diameter(std::vector<cplx> pts) {
  std::sort(pts.begin(), pts.end(), [](const cplx& a, const cplx& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const cplx& a, const cplx& b) {
                          return a.real() == b.real() && a.imag() == b.imag();
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n == 1) return 0.0;
  auto cross = [](const cplx& o, const cplx& a, const cplx& b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
  };
  std::vector<cplx> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k > 1 ? k - 1 : k);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, std::abs(hull[i] - hull[j]));
  return best;
}

}  // namespace

double max_incomplete_char_sum(const PrimeContext& ctx) {
  const std::uint64_t p = ctx.p, L = p - 1;
  double best = 0.0;
  std::vector<cplx> prefix(p);
  for (std::uint64_t j = 1; j <= p - 2; ++j) {
    prefix[0] = cplx{0, 0};
    KahanComplex acc;
    for (std::uint64_t c = 1; c <= p - 1; ++c) {
      acc.add(unit_phase(j * ctx.ind[c] % L, L));
      prefix[c] = acc.value();
    }
    best = std::max(best, point_set_diameter(prefix));
  }
  return best;
}

}  // namespace factmod
