#include "factmod/dft.hpp"

#include <cmath>
#include <cstddef>

namespace factmod {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}
}  // namespace

cplx unit_phase(std::uint64_t num, std::uint64_t den) {
  num %= den;
  double angle = kTwoPi * (static_cast<double>(num) / static_cast<double>(den));
  return {std::cos(angle), std::sin(angle)};
}

void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // One table of M/2 roots serves every level; each twiddle comes straight
  // from cos/sin of the 2*pi constant, no incremental rotation drift.
  std::vector<cplx> root(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    double angle = sign * kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    root[j] = {std::cos(angle), std::sin(angle)};
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * root[j * stride];
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

std::vector<cplx> dft_any_length(const std::vector<cplx>& x, int sign) {
  const std::size_t L = x.size();
  if (L == 0) return {};
  if (L == 1) return x;
  if ((L & (L - 1)) == 0) {
    std::vector<cplx> a = x;
    fft_pow2(a, sign);
    return a;
  }

  // Bluestein: nk = (n^2 + k^2 - (k-n)^2)/2 turns the DFT into a linear
  // convolution against the conjugate chirp.  n^2 is reduced mod 2L in exact
  // integer arithmetic before touching doubles.
  const double base = static_cast<double>(sign) * (kTwoPi / 2.0) /
                      static_cast<double>(L);
  std::vector<cplx> chirp(L);
  for (std::size_t n = 0; n < L; ++n) {
    std::uint64_t sq = (static_cast<std::uint64_t>(n) * n) % (2 * L);
    double angle = base * static_cast<double>(sq);
    chirp[n] = {std::cos(angle), std::sin(angle)};
  }

  const std::size_t M = next_pow2(2 * L - 1);
  std::vector<cplx> A(M, cplx{0, 0}), B(M, cplx{0, 0});
  for (std::size_t n = 0; n < L; ++n) A[n] = x[n] * chirp[n];
  B[0] = std::conj(chirp[0]);
  for (std::size_t n = 1; n < L; ++n) {
    B[n] = std::conj(chirp[n]);
    B[M - n] = B[n];
  }
  fft_pow2(A, -1);
  fft_pow2(B, -1);
  for (std::size_t i = 0; i < M; ++i) A[i] *= B[i];
  fft_pow2(A, +1);
  const double inv_m = 1.0 / static_cast<double>(M);
  std::vector<cplx> out(L);
  for (std::size_t k = 0; k < L; ++k) out[k] = A[k] * inv_m * chirp[k];
  return out;
}

}  // namespace factmod
