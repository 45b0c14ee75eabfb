#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "factmod/repcount.hpp"
#include "testutil.hpp"

using namespace factmod;
using testutil::code_of;

TEST_CASE("representation tables") {
  auto c5 = build_context(5);
  auto t = table_F(c5, {0, 4}, 2);
  REQUIRE(t.by_residue.size() == 5);
  CHECK(t.by_residue[0] == 0);
  CHECK(t.at(1) == 5);
  CHECK(t.at(2) == 4);
  CHECK(t.at(3) == 2);
  CHECK(t.at(4) == 5);

  // total mass is N^ell
  CountScalar total = 0;
  for (const auto& c : t.by_residue) total += c;
  CHECK(total == 16);

  // associativity: the ell=3 table is the ell=2 table convolved once more
  auto c7 = build_context(7);
  auto t2 = table_F(c7, {1, 4}, 2);
  auto t3 = table_F(c7, {1, 4}, 3);
  auto res = sequence_residues(c7, {1, 4});
  std::vector<CountScalar> manual(7, CountScalar(0));
  for (std::uint64_t a = 1; a < 7; ++a)
    if (t2.at(a) != 0)
      for (std::uint64_t v : res) manual[a * v % 7] += t2.at(a);
  for (std::uint64_t a = 0; a < 7; ++a) CHECK(t3.at(a) == manual[a]);
}

TEST_CASE("value set sizes") {
  auto c7 = build_context(7);
  CHECK(value_set_V(c7, {0, 6}, 1) == 4);  // {1,2,3,6}
  CHECK(value_set_V(c7, {0, 6}, 2) == 6);

  // once H = 0, adding a factor can only widen the value set (1! = 1)
  for (unsigned ell = 1; ell < 4; ++ell)
    CHECK(value_set_V(c7, {0, 6}, ell) <= value_set_V(c7, {0, 6}, ell + 1));
}

TEST_CASE("largest single multiplicity") {
  auto c7 = build_context(7);
  auto m = max_F1(c7, {0, 6});
  CHECK(m.a == 1);  // 1! = 5! = 1; ties break to the smallest residue
  CHECK(m.count == 2);

  auto c5 = build_context(5);
  auto m5 = max_F1(c5, {0, 4});
  CHECK(m5.a == 1);
  CHECK(m5.count == 2);
}

TEST_CASE("fixed-sum factorial products") {
  // compositions of 4 into 2 parts: (1,3) and (3,1) give 1!3! = 6 = 1 mod 5,
  // (2,2) gives 4; N = 4 sits outside N < p/ell, so the cap must be lifted
  auto c5 = build_context(5);
  CHECK(code_of([&] { count_G(c5, 1, 4, 2); }) == errc::window_out_of_range);
  CHECK(count_G(c5, 1, 4, 2, true) == 2);
  CHECK(count_G(c5, 4, 4, 2, true) == 1);
  CHECK(count_G(c5, 2, 4, 2, true) == 0);

  auto g = table_G(c5, 4, 2, true);
  CountScalar total = 0;
  for (const auto& x : g) total += x;
  CHECK(total == 3);  // binom(3,1)

  // the same values inside the default regime
  auto c11 = build_context(11);
  CHECK(count_G(c11, 6, 4, 2) == 2);
  CHECK(count_G(c11, 4, 4, 2) == 1);
  CHECK(count_G(c11, 1, 4, 2) == 0);

  // lifted far past p: every composition of 12 into 2 parts has a part
  // >= 5, so all products vanish mod 5
  CHECK(count_G(c5, 0, 12, 2, true) == 11);
  CHECK(count_G(c5, 1, 12, 2, true) == 0);
}

TEST_CASE("exact discrepancy of weighted factorial points") {
  auto c5 = build_context(5);
  // points 1/5 (weight 2), 2/5, 4/5: the interval [1/5, 2/5] holds 3 of 4
  // points against 1/5 of the length
  auto d = discrepancy_D(c5, 1, {0, 4}, 1);
  CHECK(d.num == 11);
  CHECK(d.den == 20);
  CHECK(d.d == doctest::Approx(0.55));
  CHECK(d.alpha == doctest::Approx(0.2));
  CHECK(d.beta == doctest::Approx(0.4));

  // a single point: the degenerate closed interval at the point mass
  auto single = discrepancy_D(c5, 1, {0, 1}, 1);
  CHECK(single.num == 1);
  CHECK(single.den == 1);
  CHECK(single.d == doctest::Approx(1.0));

  CHECK(code_of([&] { discrepancy_D(c5, 0, {0, 4}, 1); }) ==
        errc::non_invertible_multiplier);

  // table reuse gives identical answers
  auto t = table_F(c5, {0, 4}, 1);
  for (std::uint64_t a = 1; a < 5; ++a) {
    auto direct = discrepancy_D(c5, a, {0, 4}, 1);
    auto reused = discrepancy_from_table(c5, a, t);
    CHECK(direct.num == reused.num);
    CHECK(direct.den == reused.den);
    CHECK(direct.d == reused.d);
  }

  // discrepancy is always within (0, 1]
  auto c31 = build_context(31);
  for (std::uint64_t a : {1ull, 7ull, 30ull}) {
    auto r = discrepancy_D(c31, a, {0, 30}, 2);
    CHECK(r.d > 0.0);
    CHECK(r.d <= 1.0);
    CHECK(r.num <= r.den);
  }
}

TEST_CASE("product exponential sums") {
  auto c5 = build_context(5);
  cplx z = exp_sum_product(c5, 1, {0, 4}, 1);
  CHECK(z.real() == doctest::Approx(0.11803398874989485).epsilon(1e-12));
  CHECK(z.imag() == doctest::Approx(1.5388417685876266).epsilon(1e-12));

  // a = 0 collapses every phase to 1
  cplx full = exp_sum_product(c5, 0, {0, 4}, 2);
  CHECK(full.real() == doctest::Approx(16.0));
  CHECK(std::abs(full.imag()) < 1e-12);
}
