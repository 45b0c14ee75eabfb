#include <doctest.h>

#include <cstdint>
#include <vector>

#include "factmod/exactconv.hpp"
#include "factmod/fieldcore.hpp"
#include "testutil.hpp"

using namespace factmod;
using testutil::code_of;

namespace {

// Quadratic reference convolution, written out independently of the library.
std::vector<CountScalar> slow_cyclic(const std::vector<CountScalar>& a,
                                     const std::vector<CountScalar>& b) {
  const std::size_t L = a.size();
  std::vector<CountScalar> c(L, CountScalar(0));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) c[(i + j) % L] += a[i] * b[j];
  return c;
}

std::vector<CountScalar> random_vec(std::size_t n, unsigned bits,
                                    unsigned long seed) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  std::vector<CountScalar> v(n);
  for (auto& x : v) x = rng.get_z_bits(bits);
  return v;
}

}  // namespace

TEST_CASE("schoolbook cyclic convolution") {
  std::vector<CountScalar> a{1, 2}, b{3, 4};
  CHECK(cyclic_convolve(a, b) == std::vector<CountScalar>{11, 10});

  std::vector<CountScalar> one{5}, other{7};
  CHECK(cyclic_convolve(one, other) == std::vector<CountScalar>{35});

  // delta is the identity
  std::vector<CountScalar> h{4, 0, 9, 2}, delta{1, 0, 0, 0};
  CHECK(cyclic_convolve(h, delta) == h);
}

TEST_CASE("ntt path agrees with the quadratic reference") {
  for (std::size_t len : {65u, 100u, 101u, 128u, 257u}) {
    auto a = random_vec(len, 64, 17 + len);
    auto b = random_vec(len, 64, 31 + len);
    CHECK(cyclic_convolve(a, b) == slow_cyclic(a, b));
  }
  // wide entries force several CRT moduli
  auto a = random_vec(90, 100, 7);
  auto b = random_vec(90, 100, 9);
  CHECK(cyclic_convolve(a, b) == slow_cyclic(a, b));
}

TEST_CASE("cyclic powers") {
  auto h = random_vec(12, 40, 3);
  CHECK(cyclic_power(h, 1) == h);
  CHECK(cyclic_power(h, 2) == slow_cyclic(h, h));
  CHECK(cyclic_power(h, 3) == slow_cyclic(slow_cyclic(h, h), h));

  // above the schoolbook cutoff as well
  auto big = random_vec(70, 48, 5);
  CHECK(cyclic_power(big, 3) == slow_cyclic(slow_cyclic(big, big), big));

  // power of the total mass is conserved
  auto cube = cyclic_power(big, 3);
  CountScalar mass = 0, total = 0;
  for (const auto& x : big) mass += x;
  for (const auto& x : cube) total += x;
  CHECK(total == mass * mass * mass);
}

TEST_CASE("support powers") {
  std::vector<std::uint8_t> h{1, 0, 1};
  CHECK(cyclic_power_support(h, 1) == h);
  // positions {0,2}: pair sums {0,2,4=1 mod 3} cover everything
  CHECK(cyclic_power_support(h, 2) == std::vector<std::uint8_t>{1, 1, 1});

  std::vector<std::uint8_t> single{0, 1, 0, 0};
  CHECK(cyclic_power_support(single, 2) ==
        std::vector<std::uint8_t>{0, 0, 1, 0});
  CHECK(cyclic_power_support(single, 3) ==
        std::vector<std::uint8_t>{0, 0, 0, 1});

  // long enough to leave the schoolbook regime
  std::vector<std::uint8_t> wide(97, 0);
  wide[1] = 1;
  wide[3] = 1;
  auto sq = cyclic_power_support(wide, 2);
  for (std::size_t k = 0; k < 97; ++k)
    CHECK(sq[k] == (k == 2 || k == 4 || k == 6 ? 1 : 0));
}

TEST_CASE("ntt moduli are usable") {
  for (const auto& m : detail::kNttModuli) {
    CHECK(is_prime_u64(m.q));
    CHECK((m.q - 1) % (1ull << m.two_adic) == 0);
    CHECK(((m.q - 1) >> m.two_adic) % 2 == 1);
    // root really generates: root^((q-1)/f) != 1 for every prime factor f
    for (std::uint64_t f : prime_factors(m.q - 1))
      CHECK(powmod(m.root, (m.q - 1) / f, m.q) != 1);
  }
}

TEST_CASE("convolution size and magnitude guards") {
  std::vector<CountScalar> a{1, 2}, b{3};
  CHECK_THROWS_AS(cyclic_convolve(a, b), domain_error);
  CHECK_THROWS_AS(cyclic_convolve({}, {}), domain_error);
  CHECK_THROWS_AS(cyclic_power(a, 0), domain_error);

  // entries so wide that no modulus set can certify the result
  std::vector<CountScalar> huge(65, CountScalar(0));
  huge[0] = CountScalar(1) << 400;
  huge[1] = CountScalar(1) << 400;
  CHECK(code_of([&] { cyclic_convolve(huge, huge); }) == errc::too_large);
}
