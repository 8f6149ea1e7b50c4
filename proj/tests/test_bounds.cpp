#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ksys/bounds.hpp"
#include "ksys/util.hpp"

using namespace ksys;

TEST_CASE("hand-checked bound values") {
  BoundParams p;
  p.t = 1;
  p.L = 1;
  double b1 = eval_bound("thm1.3", p);
  CHECK(std::abs(b1 - 278.9) < 0.1);
  double want1 = 1.5 + (std::acos(-1.0) * std::acos(-1.0) / 0.2629) * std::exp(2.0);
  CHECK(b1 == doctest::Approx(want1).epsilon(1e-12));

  p.L = 2;
  double b2 = eval_bound("thm1.3", p);
  // Independent arithmetic path for the same formula.
  double want = 1.5 + (std::acos(-1.0) * std::acos(-1.0) / 0.2629) * std::exp(4.0);
  CHECK(b2 == doctest::Approx(want).epsilon(1e-12));
  CHECK(b2 > 2000.0);
  CHECK(b2 < 2100.0);

  BoundParams sq;
  sq.t = 2;
  sq.iota = 8;
  CHECK(std::abs(eval_bound("prop3.1", sq) - 4.0 * std::sqrt(32.0)) < 1e-9);
  CHECK(std::abs(eval_bound("prop3.1", sq) - 22.62741699796952) < 1e-9);

  BoundParams tu;
  tu.t = 2;
  tu.D = 4;
  CHECK(eval_bound("remark3.1", tu) == doctest::Approx(15.0).epsilon(1e-12));
}

TEST_CASE("dispatch table and rejections") {
  BoundParams p;
  p.t = 4;
  p.k = 1;
  p.C = 1;
  CHECK(eval_bound("thm1.1", p) ==
        doctest::Approx(std::pow(4.0, 3.0) / std::pow(std::log(4.0), 2)).epsilon(1e-12));
  CHECK(eval_bound("thm1.4", p) == doctest::Approx(std::pow(4.0, 2.0)).epsilon(1e-12));
  CHECK(eval_bound("arcs-przytycki", p) == doctest::Approx(std::pow(4.0, 2.0)).epsilon(1e-12));
  p.L = 4;
  CHECK(eval_bound("lower-eL4", p) == doctest::Approx(4.0 * std::exp(1.0)).epsilon(1e-12));

  BoundParams bad;
  bad.t = 1;
  bad.k = 1;
  CHECK_THROWS_AS(eval_bound("thm1.1", bad), invalid_input);
  CHECK_THROWS_AS(eval_bound("no-such-statement", p), invalid_input);
}

TEST_CASE("recursion trace") {
  // k=1, g=1, n=2, C=1: steps 2^3 + 3^3 = 35, closed 3^4 = 81.
  auto r = recursion_bound(1, 2, 1, 1.0);
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0] == doctest::Approx(8.0));
  CHECK(r.steps[1] == doctest::Approx(27.0));
  CHECK(r.step_sum == doctest::Approx(35.0));
  CHECK(r.closed_term == doctest::Approx(81.0));
  CHECK(r.total == doctest::Approx(116.0));

  // k=2 cubic variant: g=0, n=3 gives 1 + 8 + 27 = 36 against 3^4 = 81.
  auto c = recursion_bound(0, 3, 2, 1.0);
  CHECK(c.step_sum == doctest::Approx(36.0));
  CHECK(c.closed_term == doctest::Approx(81.0));
  CHECK(c.step_sum <= c.closed_term);

  CHECK_THROWS_AS(recursion_bound(0, 0, 1, 1.0), invalid_input);
  CHECK_THROWS_AS(recursion_bound(-1, 3, 1, 1.0), invalid_input);
}

TEST_CASE("recursion step-sum stays below the closed form on a sweep") {
  for (int k = 1; k <= 4; ++k)
    for (int g = 0; g <= 10; ++g)
      for (int n = 0; n <= 100; ++n) {
        if (g == 0 && n == 0) continue;
        auto r = recursion_bound(g, n, k, 1.0);
        CHECK(r.step_sum <= r.closed_term + 1e-9);
      }
}

TEST_CASE("theta sandwich") {
  auto t = corollary_theta(0, 3, 2, 1.0, 0.0, 1.0);
  CHECK(t.lower == doctest::Approx(1.0));
  CHECK(t.upper == doctest::Approx(81.0));
  CHECK(t.consistent);
  CHECK_THROWS_AS(corollary_theta(0, 3, 1, 1.0, 0.0, 1.0), invalid_input);
}

TEST_CASE("monotonicity in the driving parameters") {
  for (double t = 2; t < 20; t += 1.5) {
    BoundParams a, b;
    a.t = t;
    b.t = t + 1;
    a.k = b.k = 2;
    a.C = b.C = 1;
    CHECK(eval_bound("thm1.1", a) < eval_bound("thm1.1", b));
    CHECK(eval_bound("thm1.4", a) < eval_bound("thm1.4", b));
    a.L = b.L = 1.0;
    CHECK(eval_bound("thm1.3", a) < eval_bound("thm1.3", b));
  }
}
