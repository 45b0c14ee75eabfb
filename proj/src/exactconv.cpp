#include "factmod/exactconv.hpp"

#include <algorithm>
#include <cstddef>

#include "factmod/fieldcore.hpp"

namespace factmod {

namespace detail {

void ntt_pow2(std::vector<std::uint64_t>& a, const NttModulus& m, bool invert) {
  const std::size_t n = a.size();
  const std::uint64_t q = m.q;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t wlen = powmod(m.root, (q - 1) / len, q);
    if (invert) wlen = powmod(wlen, q - 2, q);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t w = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::uint64_t u = a[i + j];
        std::uint64_t v = a[i + j + len / 2] * w % q;
        a[i + j] = u + v < q ? u + v : u + v - q;
        a[i + j + len / 2] = u >= v ? u - v : u + q - v;
        w = w * wlen % q;
      }
    }
  }
  if (invert) {
    std::uint64_t n_inv = powmod(n % q, q - 2, q);
    for (auto& x : a) x = x * n_inv % q;
  }
}

}  // namespace detail

namespace {

using detail::NttModulus;

constexpr std::size_t kSchoolbookMax = 64;

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

std::vector<CountScalar> schoolbook(const std::vector<CountScalar>& a,
                                    const std::vector<CountScalar>& b) {
  const std::size_t L = a.size();
  std::vector<CountScalar> c(L, CountScalar(0));
  for (std::size_t i = 0; i < L; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < L; ++j) {
      if (b[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= L) k -= L;
      mpz_addmul(c[k].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

// Picks moduli whose two-adic order supports `size` until the product
// strictly exceeds `bound`.
std::vector<NttModulus> pick_moduli(const CountScalar& bound, std::size_t size) {
  std::vector<NttModulus> picked;
  CountScalar prod = 1;
  for (const auto& m : detail::kNttModuli) {
    if ((std::size_t{1} << m.two_adic) < size) continue;
    picked.push_back(m);
    prod *= CountScalar(static_cast<unsigned long>(m.q));
    if (prod > bound) return picked;
  }
  fail(errc::too_large, "convolution values exceed the CRT modulus pool");
}

std::vector<std::uint64_t> reduce_mod(const std::vector<CountScalar>& v,
                                      std::uint64_t q) {
  std::vector<std::uint64_t> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = mpz_fdiv_ui(v[i].get_mpz_t(), q);
  return r;
}

// Linear convolution mod q of two length-L vectors, folded back to Z_L.
std::vector<std::uint64_t> cyclic_mod_q(std::vector<std::uint64_t> fa,
                                        std::vector<std::uint64_t> fb,
                                        std::size_t L, const NttModulus& m,
                                        std::size_t padded) {
  fa.resize(padded, 0);
  fb.resize(padded, 0);
  detail::ntt_pow2(fa, m, false);
  detail::ntt_pow2(fb, m, false);
  for (std::size_t i = 0; i < padded; ++i) fa[i] = fa[i] * fb[i] % m.q;
  detail::ntt_pow2(fa, m, true);
  std::vector<std::uint64_t> c(L);
  for (std::size_t i = 0; i < L; ++i) {
    std::uint64_t v = fa[i];
    if (i + L < 2 * L - 1) {
      v += fa[i + L];
      if (v >= m.q) v -= m.q;
    }
    c[i] = v;
  }
  return c;
}

std::vector<CountScalar> crt_combine(
    const std::vector<std::vector<std::uint64_t>>& residues,
    const std::vector<NttModulus>& moduli, std::size_t L) {
  std::vector<CountScalar> out(L, CountScalar(0));
  for (std::size_t i = 0; i < L; ++i) {
    CountScalar x(static_cast<unsigned long>(residues[0][i]));
    CountScalar mod(static_cast<unsigned long>(moduli[0].q));
    for (std::size_t k = 1; k < moduli.size(); ++k) {
      const std::uint64_t q = moduli[k].q;
      std::uint64_t x_mod_q = mpz_fdiv_ui(x.get_mpz_t(), q);
      std::uint64_t mod_q = mpz_fdiv_ui(mod.get_mpz_t(), q);
      std::uint64_t delta = residues[k][i] >= x_mod_q
                                ? residues[k][i] - x_mod_q
                                : residues[k][i] + q - x_mod_q;
      std::uint64_t t = delta * invmod(mod_q, q) % q;
      x += mod * CountScalar(static_cast<unsigned long>(t));
      mod *= CountScalar(static_cast<unsigned long>(q));
    }
    out[i] = x;
  }
  return out;
}

CountScalar vec_sum(const std::vector<CountScalar>& v) {
  CountScalar s = 0;
  for (const auto& x : v) s += x;
  return s;
}

CountScalar vec_max(const std::vector<CountScalar>& v) {
  CountScalar m = 0;
  for (const auto& x : v)
    if (x > m) m = x;
  return m;
}

}  // namespace

std::vector<CountScalar> cyclic_convolve(const std::vector<CountScalar>& a,
                                         const std::vector<CountScalar>& b) {
  if (a.size() != b.size() || a.empty())
    fail(errc::bad_range, "cyclic_convolve needs equal nonzero lengths");
  const std::size_t L = a.size();
  if (L <= kSchoolbookMax) return schoolbook(a, b);

  CountScalar bound = std::min(vec_sum(a) * vec_max(b), vec_sum(b) * vec_max(a));
  if (bound == 0) return std::vector<CountScalar>(L, CountScalar(0));
  const std::size_t padded = next_pow2(2 * L - 1);
  auto moduli = pick_moduli(bound, padded);
  std::vector<std::vector<std::uint64_t>> residues;
  residues.reserve(moduli.size());
  for (const auto& m : moduli)
    residues.push_back(cyclic_mod_q(reduce_mod(a, m.q), reduce_mod(b, m.q), L,
                                    m, padded));
  return crt_combine(residues, moduli, L);
}

std::vector<CountScalar> cyclic_power(const std::vector<CountScalar>& h,
                                      unsigned ell) {
  if (ell == 0) fail(errc::ell_out_of_range, "ell must be >= 1");
  if (h.empty()) fail(errc::bad_range, "empty histogram");
  const std::size_t L = h.size();
  if (ell == 1) return h;
  if (L <= kSchoolbookMax) {
    std::vector<CountScalar> c = h;
    for (unsigned step = 2; step <= ell; ++step) c = schoolbook(c, h);
    return c;
  }

  CountScalar total = vec_sum(h);
  if (total == 0) return std::vector<CountScalar>(L, CountScalar(0));
  CountScalar bound = 1;
  for (unsigned i = 0; i < ell; ++i) bound *= total;
  const std::size_t padded = next_pow2(2 * L - 1);
  auto moduli = pick_moduli(bound, padded);

  std::vector<std::vector<std::uint64_t>> residues;
  residues.reserve(moduli.size());
  for (const auto& m : moduli) {
    auto base = reduce_mod(h, m.q);
    std::vector<std::uint64_t> base_ntt = base;
    base_ntt.resize(padded, 0);
    detail::ntt_pow2(base_ntt, m, false);
    std::vector<std::uint64_t> c = base;
    for (unsigned step = 2; step <= ell; ++step) {
      std::vector<std::uint64_t> fc = c;
      fc.resize(padded, 0);
      detail::ntt_pow2(fc, m, false);
      for (std::size_t i = 0; i < padded; ++i)
        fc[i] = fc[i] * base_ntt[i] % m.q;
      detail::ntt_pow2(fc, m, true);
      for (std::size_t i = 0; i < L; ++i) {
        std::uint64_t v = fc[i];
        if (i + L < 2 * L - 1) {
          v += fc[i + L];
          if (v >= m.q) v -= m.q;
        }
        c[i] = v;
      }
    }
    residues.push_back(std::move(c));
  }
  return crt_combine(residues, moduli, L);
}

std::vector<std::uint8_t> cyclic_power_support(const std::vector<std::uint8_t>& h,
                                               unsigned ell) {
  if (ell == 0) fail(errc::ell_out_of_range, "ell must be >= 1");
  const std::size_t L = h.size();
  std::vector<CountScalar> cur(L), base(L);
  for (std::size_t i = 0; i < L; ++i) base[i] = h[i] ? 1 : 0;
  cur = base;
  for (unsigned step = 2; step <= ell; ++step) {
    cur = cyclic_convolve(cur, base);
    for (auto& x : cur)
      if (x > 1) x = 1;  // keep magnitudes flat; only reachability matters
  }
  std::vector<std::uint8_t> out(L);
  for (std::size_t i = 0; i < L; ++i) out[i] = cur[i] != 0;
  return out;
}

}  // namespace factmod
