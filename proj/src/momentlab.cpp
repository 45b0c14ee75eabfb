#include "factmod/momentlab.hpp"

#include <cmath>

#include "factmod/exactconv.hpp"

namespace factmod {

void require_ell(unsigned ell) {
  if (ell < 1 || ell > 8)
    fail(errc::ell_out_of_range,
         "ell=" + std::to_string(ell) + " outside 1..8");
}

ResidueHistogram histogram(const PrimeContext& ctx, const Window& w,
                           Domain domain) {
  auto res = sequence_residues(ctx, w);
  ResidueHistogram h;
  h.domain = domain;
  h.p = ctx.p;
  h.counts.assign(domain == Domain::multiplicative ? ctx.p - 1 : ctx.p,
                  CountScalar(0));
  for (std::uint64_t v : res) {
    std::size_t slot =
        domain == Domain::multiplicative ? ctx.ind[v] : static_cast<std::size_t>(v);
    h.counts[slot] += 1;
  }
  return h;
}

namespace {

CountScalar sum_of_squares_of_power(const ResidueHistogram& h, unsigned ell) {
  auto conv = cyclic_power(h.counts, ell);
  CountScalar total = 0;
  for (const auto& c : conv) mpz_addmul(total.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
  return total;
}

double spectral_moment(const std::vector<cplx>& spec, unsigned ell) {
  KahanSum acc;
  for (const cplx& z : spec) {
    double m2 = std::norm(z);
    double term = 1.0;
    for (unsigned i = 0; i < ell; ++i) term *= m2;
    acc.add(term);
  }
  return acc.value();
}

}  // namespace

CountScalar count_I(const PrimeContext& ctx, const Window& w, unsigned ell) {
  require_ell(ell);
  return sum_of_squares_of_power(histogram(ctx, w, Domain::multiplicative), ell);
}

CountScalar count_J(const PrimeContext& ctx, const Window& w, unsigned ell) {
  require_ell(ell);
  return sum_of_squares_of_power(histogram(ctx, w, Domain::additive), ell);
}

double moment_T(const PrimeContext& ctx, const PhasePolynomial& f,
                const Window& w, unsigned ell) {
  if (ell < 1) fail(errc::ell_out_of_range, "ell must be >= 1");
  return spectral_moment(spectrum_T(ctx, f, w), ell);
}

double moment_S(const PrimeContext& ctx, const Window& w, unsigned ell) {
  if (ell < 1) fail(errc::ell_out_of_range, "ell must be >= 1");
  return spectral_moment(spectrum_S(ctx, w), ell);
}

}  // namespace factmod
