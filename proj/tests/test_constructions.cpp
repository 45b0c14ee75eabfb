#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "factmod/constructions.hpp"
#include "testutil.hpp"

using namespace factmod;
using testutil::code_of;

TEST_CASE("wilson pair products") {
  auto c7 = build_context(7);
  auto w3 = wilson_pair(c7, 3);
  CHECK(w3.product == 1);  // 3! 3! = 36 = 1 mod 7
  CHECK(w3.sign == 1);
  auto w2 = wilson_pair(c7, 2);
  CHECK(w2.product == 6);  // 2! 4! = 48 = -1 mod 7
  CHECK(w2.sign == -1);

  for (std::uint64_t p : primes_in_range(3, 300)) {
    auto ctx = build_context(p);
    for (std::uint64_t b = 1; b < p; ++b) {
      auto pr = wilson_pair(ctx, b);
      CHECK(pr.product == (pr.sign == 1 ? 1 : p - 1));
    }
  }
  CHECK(code_of([&] { wilson_pair(c7, 0); }) == errc::out_of_range);
  CHECK(code_of([&] { wilson_pair(c7, 7); }) == errc::out_of_range);
}

TEST_CASE("wilson representation of arbitrary residues") {
  auto c7 = build_context(7);
  auto w = wilson_representation(c7, 3);
  CHECK(w.b == 5);  // 3^{-1} = 5
  CHECK(w.r_b == 0);
  CHECK(w.product == 3);

  for (std::uint64_t p : primes_in_range(3, 200)) {
    auto ctx = build_context(p);
    for (std::uint64_t a = 1; a < p; ++a)
      CHECK(wilson_representation(ctx, a).product == a);
  }
}

TEST_CASE("nonresidue spacings and the alternating identity") {
  auto c7 = build_context(7);
  auto sp = nonresidue_spacings(c7, 3);
  CHECK(sp.gaps == std::vector<std::uint64_t>{3, 2, 1});  // 3, 5, 6
  CHECK(sp.n_j == 6);
  CHECK(sp.alt_sum == 2);
  CHECK(sp.legendre_sum == 2);

  for (std::uint64_t p : primes_in_range(3, 200)) {
    auto ctx = build_context(p);
    for (std::uint64_t j = 1; j <= (p - 1) / 2; ++j) {
      auto s = nonresidue_spacings(ctx, j);
      CHECK(s.alt_sum == s.legendre_sum);
    }
  }
  CHECK(code_of([&] { nonresidue_spacings(c7, 4); }) == errc::out_of_range);
  CHECK(code_of([&] { nonresidue_spacings(c7, 0); }) == errc::out_of_range);
}

TEST_CASE("first factorial primitive root") {
  CHECK(find_primroot_factorial(build_context(3)).n == 2);
  CHECK(find_primroot_factorial(build_context(5)).n == 2);
  CHECK(find_primroot_factorial(build_context(7)).n == 4);

  for (std::uint64_t p : primes_in_range(3, 500)) {
    auto hit = find_primroot_factorial(build_context(p));
    CHECK(hit.found);
    CHECK(hit.ratio == doctest::Approx(static_cast<double>(hit.n) /
                                       std::sqrt(static_cast<double>(p))));
  }
}

TEST_CASE("primitive root counts over windows") {
  auto c7 = build_context(7);
  CHECK(count_Q(c7, {0, 6}) == 1);       // only 4! = 3 generates
  CHECK(count_Qm(c7, 1, {0, 6}) == 1);   // m = 1 is plain counting
  CHECK(count_Qm(c7, 2, {0, 6}) == 0);   // no consecutive pair qualifies

  // runs past the valid range never qualify, so large m just yields 0
  CHECK(count_Qm(c7, 6, {0, 6}) == 0);
  CHECK(code_of([&] { count_Qm(c7, 0, {0, 6}); }) == errc::out_of_range);

  // m-fold counts are monotone nonincreasing in m
  auto c101 = build_context(101);
  std::uint64_t prev = count_Qm(c101, 1, {0, 100});
  CHECK(prev == count_Q(c101, {0, 100}));
  for (std::uint64_t m = 2; m <= 5; ++m) {
    std::uint64_t cur = count_Qm(c101, m, {0, 100});
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("power residue classification") {
  auto c7 = build_context(7);
  // prime divisors of 6 are {2, 3}
  auto both = classify_power_residues(c7, {2, 3}, {0, 6});
  CHECK(both.count == 2);  // n = 1 and n = 5, u = 1
  auto neither = classify_power_residues(c7, {}, {0, 6});
  CHECK(neither.count == 1);  // 4! = 3 only
  CHECK(neither.main_term == doctest::Approx(2.0));  // N phi(6)/6

  auto only2 = classify_power_residues(c7, {2}, {0, 6});
  auto only3 = classify_power_residues(c7, {3}, {0, 6});
  CHECK(both.count + neither.count + only2.count + only3.count == 6);

  CHECK(code_of([&] { classify_power_residues(c7, {5}, {0, 6}); }) ==
        errc::invalid_subset);
  CHECK(code_of([&] { classify_power_residues(c7, {2, 2}, {0, 6}); }) ==
        errc::invalid_subset);

  // partition property on a bigger prime: subsets of {2, 3, 5} for p = 31
  auto c31 = build_context(31);
  std::uint64_t total = 0;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<std::uint64_t> subset;
    if (mask & 1) subset.push_back(2);
    if (mask & 2) subset.push_back(3);
    if (mask & 4) subset.push_back(5);
    total += classify_power_residues(c31, subset, {0, 30}).count;
  }
  CHECK(total == 30);
}

TEST_CASE("pair collision witness for the squared value set") {
  auto c7 = build_context(7);
  auto v7 = v2_witness_count(c7);
  CHECK(v7.w_count == 1);
  CHECK(v7.lower_bound == doctest::Approx(3.5));

  auto c5 = build_context(5);
  CHECK(v2_witness_count(c5).w_count == 1);
}

TEST_CASE("distinct factorial scan records") {
  auto r5 = distinct_factorial_check(5);
  CHECK(r5.is_distinct);
  CHECK(r5.missing_residue == 3);  // {2,1,4} misses 3 = -2! mod 5
  CHECK(r5.missing_matches_prediction);
  CHECK(r5.mod8_matches_prediction);

  auto r7 = distinct_factorial_check(7);
  CHECK_FALSE(r7.is_distinct);

  // p = 3 is distinct vacuously but matches neither prediction
  auto r3 = distinct_factorial_check(3);
  CHECK(r3.is_distinct);
  CHECK_FALSE(r3.missing_matches_prediction);
  CHECK_FALSE(r3.mod8_matches_prediction);

  auto recs = distinct_factorial_scan(7, 100);
  for (const auto& r : recs) CHECK_FALSE(r.is_distinct);

  CHECK(code_of([] { distinct_factorial_scan(10, 5); }) == errc::bad_range);
  CHECK(code_of([] { distinct_factorial_scan(1, 5); }) == errc::bad_range);
}

TEST_CASE("lexicographically smallest product representation") {
  auto c7 = build_context(7);
  auto rep = search_representation(c7, 5, 2, 6);
  REQUIRE(rep.has_value());
  CHECK(*rep == std::vector<std::uint64_t>{2, 3});  // 2! 3! = 12 = 5 mod 7

  // 5 is not a factorial value mod 7, so arity 1 fails
  CHECK_FALSE(search_representation(c7, 5, 1, 6).has_value());

  auto one = search_representation(c7, 3, 1, 6);
  REQUIRE(one.has_value());
  CHECK(*one == std::vector<std::uint64_t>{4});

  // every witness multiplies back to a, and is lexicographically minimal
  // against brute force on a slightly larger prime
  auto c11 = build_context(11);
  auto prefix = sequence_prefix(c11, 10);
  for (std::uint64_t a = 1; a < 11; ++a) {
    auto w = search_representation(c11, a, 2, 10);
    std::vector<std::uint64_t> best;
    for (std::uint64_t n1 = 1; n1 <= 10 && best.empty(); ++n1)
      for (std::uint64_t n2 = 1; n2 <= 10; ++n2)
        if (prefix[n1] * prefix[n2] % 11 == a) {
          best = {n1, n2};
          break;
        }
    if (best.empty()) {
      CHECK_FALSE(w.has_value());
    } else {
      REQUIRE(w.has_value());
      CHECK(*w == best);
    }
  }
}

TEST_CASE("value set ratio report") {
  auto rep = guy_f11_report(5, 7);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].p == 5);
  CHECK(rep.rows[0].v1 == 3);
  CHECK(rep.rows[1].p == 7);
  CHECK(rep.rows[1].v1 == 4);
  CHECK(rep.rows[0].ratio == doctest::Approx(0.6));
  CHECK(rep.rows[1].ratio == doctest::Approx(4.0 / 7.0));
  CHECK(rep.mean == doctest::Approx(0.5 * (0.6 + 4.0 / 7.0)));
  CHECK(rep.target == doctest::Approx(1.0 - std::exp(-1.0)));

  // worker count must not change anything
  auto serial = guy_f11_report(100, 400, 1);
  auto threaded = guy_f11_report(100, 400, 4);
  REQUIRE(serial.rows.size() == threaded.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].p == threaded.rows[i].p);
    CHECK(serial.rows[i].v1 == threaded.rows[i].v1);
  }
  CHECK(serial.mean == threaded.mean);
  CHECK(serial.stddev == threaded.stddev);
}

TEST_CASE("factorial-only constructions reject other sequences") {
  auto cb = build_context(11, SequenceKind::central_binomial);
  CHECK(code_of([&] { wilson_pair(cb, 1); }) == errc::not_supported);
  CHECK(code_of([&] { nonresidue_spacings(cb, 1); }) == errc::not_supported);
  CHECK(code_of([&] { v2_witness_count(cb); }) == errc::not_supported);
}
