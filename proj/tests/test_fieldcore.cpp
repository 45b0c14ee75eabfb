#include <doctest.h>

#include <cstdint>
#include <vector>

#include "factmod/fieldcore.hpp"
#include "testutil.hpp"

using namespace factmod;
using testutil::code_of;

TEST_CASE("modular helpers") {
  CHECK(powmod(3, 6, 7) == 1);
  CHECK(powmod(2, 10, 1000) == 24);
  CHECK(powmod(0, 0, 97) == 1);
  CHECK(invmod(3, 7) == 5);
  CHECK(invmod(1, 5) == 1);
  for (std::uint64_t a = 1; a < 101; ++a)
    CHECK(a * invmod(a, 101) % 101 == 1);
}

TEST_CASE("primality and factorization") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(97));
  CHECK(is_prime_u64(2147483647ull));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(9));
  CHECK_FALSE(is_prime_u64(1000003ull * 1000033ull));

  CHECK(primes_in_range(10, 30) ==
        std::vector<std::uint64_t>{11, 13, 17, 19, 23, 29});
  CHECK(primes_in_range(24, 28).empty());
  CHECK(prime_factors(12) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("context construction finds the smallest primitive root") {
  auto c7 = build_context(7);
  CHECK(c7.g == 3);
  CHECK(c7.index_of(1) == 0);
  CHECK(c7.index_of(2) == 2);  // 3^2 = 9 = 2
  CHECK(c7.index_of(6) == 3);  // 3^3 = 27 = 6
  CHECK(c7.power_of_root(3) == 6);
  CHECK(c7.power_of_root(9) == c7.power_of_root(3));  // exponents mod p-1

  auto c5 = build_context(5);
  CHECK(c5.g == 2);
  CHECK(c5.index_of(4) == 2);

  // round trip g^ind(x) = x for every nonzero x
  auto c101 = build_context(101);
  for (std::uint64_t x = 1; x < 101; ++x)
    CHECK(c101.power_of_root(c101.index_of(x)) == x);
}

TEST_CASE("context rejects bad moduli") {
  CHECK(code_of([] { build_context(9); }) == errc::not_prime);
  CHECK(code_of([] { build_context(2); }) == errc::even_or_too_small);
  CHECK(code_of([] { build_context(0); }) == errc::even_or_too_small);
  CHECK(code_of([] { build_context(1ull << 40); }) == errc::even_or_too_small);
  auto c7 = build_context(7);
  CHECK(code_of([&] { c7.index_of(0); }) == errc::out_of_range);
  CHECK(code_of([&] { c7.index_of(7); }) == errc::out_of_range);
}

TEST_CASE("factorial residues") {
  auto c7 = build_context(7);
  CHECK(sequence_residues(c7, {0, 6}) ==
        std::vector<std::uint64_t>{1, 2, 6, 3, 1, 6});
  CHECK(sequence_residues(c7, {2, 3}) == std::vector<std::uint64_t>{6, 3, 1});
  CHECK(sequence_prefix(c7, 6) ==
        std::vector<std::uint64_t>{1, 1, 2, 6, 3, 1, 6});

  auto c5 = build_context(5);
  CHECK(sequence_residues(c5, {0, 4}) == std::vector<std::uint64_t>{1, 2, 1, 4});

  // Wilson: the last in-range factorial is always -1
  for (std::uint64_t p : primes_in_range(3, 200)) {
    auto ctx = build_context(p);
    CHECK(sequence_residues(ctx, {p - 2, 1})[0] == p - 1);
  }
}

TEST_CASE("window validation") {
  auto c7 = build_context(7);
  CHECK(c7.max_sequence_arg() == 6);
  CHECK(code_of([&] { sequence_residues(c7, {0, 7}); }) ==
        errc::window_out_of_range);
  CHECK(code_of([&] { sequence_residues(c7, {6, 1}); }) ==
        errc::window_out_of_range);
  CHECK(code_of([&] { sequence_residues(c7, {0, 0}); }) ==
        errc::window_out_of_range);
}

TEST_CASE("central binomial residues") {
  auto c7 = build_context(7, SequenceKind::central_binomial);
  CHECK(c7.max_sequence_arg() == 3);
  // binom(2,1)=2, binom(4,2)=6, binom(6,3)=20=6 mod 7
  CHECK(sequence_residues(c7, {0, 3}) == std::vector<std::uint64_t>{2, 6, 6});
  CHECK(code_of([&] { sequence_residues(c7, {0, 4}); }) ==
        errc::window_out_of_range);

  // cross-check against direct binomials for a larger prime
  auto c101 = build_context(101, SequenceKind::central_binomial);
  auto got = sequence_residues(c101, {0, 50});
  mpz_class b;
  for (std::uint64_t n = 1; n <= 50; ++n) {
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    CHECK(got[n - 1] == mpz_fdiv_ui(b.get_mpz_t(), 101));
  }
}

TEST_CASE("double factorial residues") {
  auto c7 = build_context(7, SequenceKind::double_factorial);
  CHECK(c7.max_sequence_arg() == 2);
  // 3!! = 3, 5!! = 15 = 1 mod 7
  CHECK(sequence_residues(c7, {0, 2}) == std::vector<std::uint64_t>{3, 1});

  auto c11 = build_context(11, SequenceKind::double_factorial);
  // 3, 15, 105, 945 mod 11 = 3, 4, 6, 10
  CHECK(sequence_residues(c11, {0, 4}) ==
        std::vector<std::uint64_t>{3, 4, 6, 10});
}

TEST_CASE("sequence kind names round trip") {
  for (auto kind : {SequenceKind::factorial, SequenceKind::central_binomial,
                    SequenceKind::double_factorial})
    CHECK(sequence_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS_AS(sequence_kind_from_string("nope"), domain_error);
}

TEST_CASE("legendre symbol via index parity") {
  auto c7 = build_context(7);
  for (std::uint64_t x : {1, 2, 4}) CHECK(legendre(c7, x) == 1);
  for (std::uint64_t x : {3, 5, 6}) CHECK(legendre(c7, x) == -1);
  CHECK(legendre(c7, 0) == 0);
  CHECK(legendre(c7, 14) == 0);
  CHECK(legendre(c7, 9) == 1);  // reduced to 2

  // Euler criterion cross-check and zero-sum over a full period
  for (std::uint64_t p : {11ull, 101ull, 499ull}) {
    auto ctx = build_context(p);
    int sum = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
      int ls = legendre(ctx, x);
      std::uint64_t euler = powmod(x, (p - 1) / 2, p);
      CHECK((ls == 1 ? 1ull : p - 1) == euler);
      sum += ls;
    }
    CHECK(sum == 0);
  }
}
