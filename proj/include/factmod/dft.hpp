#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace factmod {

using cplx = std::complex<double>;

// Compensated (Kahan) accumulator; the direct sums promise 1e-9 * N style
// absolute accuracy, which naive summation does not leave much slack for.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

struct KahanComplex {
  KahanSum re, im;
  void add(const cplx& z) { re.add(z.real()); im.add(z.imag()); }
  cplx value() const { return {re.value(), im.value()}; }
};

// e^{2*pi*i * num/den} with the phase reduced exactly in integers first.
cplx unit_phase(std::uint64_t num, std::uint64_t den);

// In-place power-of-two FFT; sign=+1 computes sum x_n e^{+2 pi i nk/M}.
// The inverse=+1 transform is NOT normalized.
void fft_pow2(std::vector<cplx>& a, int sign);

// Arbitrary-length DFT, X_k = sum_n x_n e^{sign * 2 pi i nk/L}, via the
// Bluestein chirp reduction to a power-of-two convolution.
std::vector<cplx> dft_any_length(const std::vector<cplx>& x, int sign);

}  // namespace factmod
