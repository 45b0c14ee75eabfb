#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "factmod/boundbench.hpp"
#include "factmod/momentlab.hpp"
#include "testutil.hpp"

using namespace factmod;
using testutil::code_of;

TEST_CASE("bound kind names round trip") {
  auto kinds = all_bound_kinds();
  CHECK(kinds.size() == 15);
  for (auto k : kinds) CHECK(bound_kind_from_string(to_string(k)) == k);
  CHECK(code_of([] { bound_kind_from_string("nonsense"); }) ==
        errc::not_supported);
}

TEST_CASE("closed form right-hand sides") {
  BoundParams q;
  q.p = 101;
  q.n = 16;
  q.ell = 1;
  CHECK(eval_bound(BoundKind::I_moment, q) == doctest::Approx(64.0));  // 16^1.5
  q.ell = 2;
  CHECK(eval_bound(BoundKind::I_moment, q) == doctest::Approx(8192.0));

  q.n = 1000;
  CHECK(eval_bound(BoundKind::F_max, q) == doctest::Approx(100.0));

  q.p = 100;  // not prime, but the formula does not care
  CHECK(eval_bound(BoundKind::polya_vinogradov, q) ==
        doctest::Approx(10.0 * std::log(100.0)));

  q.p = 101;
  q.n = 16;
  q.ell = 1;
  CHECK(eval_bound(BoundKind::J_moment, q) ==
        doctest::Approx(std::pow(16.0, 1.5)));
  q.ell = 2;
  CHECK(eval_bound(BoundKind::J_moment, q) ==
        doctest::Approx(std::pow(16.0, 2.0 + 4.0 / 3.0)));

  q.n = 50;
  CHECK(eval_bound(BoundKind::T_secondmoment, q) ==
        doctest::Approx(101.0 * std::pow(50.0, 1.5)));

  // bounds are monotone in the window length
  for (auto kind : {BoundKind::T_individual, BoundKind::I_moment,
                    BoundKind::F_max, BoundKind::J_moment}) {
    BoundParams lo = q, hi = q;
    lo.n = 100;
    hi.n = 200;
    CHECK(eval_bound(kind, lo) < eval_bound(kind, hi));
  }
}

TEST_CASE("validity ranges of the layered bounds") {
  BoundParams q;
  q.p = 101;
  q.n = 50;
  q.ell = 1;
  q.r = 1;
  CHECK(code_of([&] { eval_bound(BoundKind::F_uniform, q); }) ==
        errc::domain_violation);  // needs ell >= 2r
  q.ell = 2;
  CHECK(eval_bound(BoundKind::F_uniform, q) > 0.0);

  q.ell = 1;
  CHECK(eval_bound(BoundKind::I_asymptotic, q) > 0.0);  // needs ell >= r
  q.r = 2;
  CHECK(code_of([&] { eval_bound(BoundKind::I_asymptotic, q); }) ==
        errc::domain_violation);

  q.ell = 2;
  q.r = 0;
  CHECK(code_of([&] { eval_bound(BoundKind::V_valueset, q); }) ==
        errc::domain_violation);
}

TEST_CASE("main terms") {
  BoundParams q;
  q.p = 11;
  q.n = 10;
  q.ell = 2;
  CHECK(eval_main_term(BoundKind::F_uniform, q).value() ==
        doctest::Approx(10.0));  // 10^2 / 10
  CHECK(eval_main_term(BoundKind::I_asymptotic, q).value() ==
        doctest::Approx(1000.0));  // 10^4 / 10
  CHECK(eval_main_term(BoundKind::V_valueset, q).value() ==
        doctest::Approx(11.0));
  CHECK(eval_main_term(BoundKind::V2_lower, q).value() ==
        doctest::Approx(11.0 * 0.625));

  q.p = 5;
  q.n = 4;
  CHECK(eval_main_term(BoundKind::G_fixedsum, q).value() ==
        doctest::Approx(0.75));  // binom(3,1)/4

  q.p = 7;
  q.n = 6;
  CHECK(eval_main_term(BoundKind::Q_primroot, q).value() ==
        doctest::Approx(2.0));  // 6 phi(6)/6

  CHECK_FALSE(eval_main_term(BoundKind::I_moment, q).has_value());
  CHECK_FALSE(eval_main_term(BoundKind::F_max, q).has_value());
  CHECK_FALSE(eval_main_term(BoundKind::polya_vinogradov, q).has_value());
}

TEST_CASE("ratio sweeps measure exact left-hand sides") {
  BoundParams q;
  auto reports = ratio_sweep(BoundKind::F_max, {101, 103}, q);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.n == r.p - 1);
    CHECK(r.ratio <= 1.0);
    CHECK(r.ratio > 0.0);
  }

  // second moment identity: lhs = (p-1) I_1 exactly
  auto ctx = build_context(11);
  auto t2 = ratio_sweep(BoundKind::T_secondmoment, {11}, q);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].lhs == CountScalar(count_I(ctx, {0, 10}, 1) * 10).get_str());

  // deviation-style kinds subtract the main term inside the lhs already
  BoundParams qg;
  qg.ell = 2;
  auto g = ratio_sweep(BoundKind::G_fixedsum, {11}, qg);
  REQUIRE(g.size() == 1);
  CHECK(g[0].n == 5);
  CHECK(g[0].ratio == doctest::Approx(g[0].lhs_value / g[0].rhs));

  // spacing sweeps default to every gap
  auto sp = ratio_sweep(BoundKind::spacing_altsum, {101}, q);
  REQUIRE(sp.size() == 1);
  CHECK(sp[0].ratio >= 0.0);

  // explicit windows survive the sweep untouched
  BoundParams qw;
  qw.h = 2;
  qw.n = 5;
  qw.explicit_window = true;
  auto iw = ratio_sweep(BoundKind::I_moment, {101}, qw);
  REQUIRE(iw.size() == 1);
  CHECK(iw[0].h == 2);
  CHECK(iw[0].n == 5);
  CHECK(iw[0].lhs == count_I(build_context(101), {2, 5}, 1).get_str());
}

TEST_CASE("sweeps are deterministic across worker counts") {
  BoundParams q;
  q.ell = 2;
  std::vector<std::uint64_t> primes{101, 103, 107, 109, 113};
  auto serial = ratio_sweep(BoundKind::I_moment, primes, q, 1);
  auto threaded = ratio_sweep(BoundKind::I_moment, primes, q, 8);
  REQUIRE(serial.size() == threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].p == threaded[i].p);
    CHECK(serial[i].lhs == threaded[i].lhs);
    CHECK(serial[i].ratio == threaded[i].ratio);
  }
}
