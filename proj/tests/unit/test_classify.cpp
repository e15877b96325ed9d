#include <cmath>
#include <limits>

#include "doctest.h"
#include "eplab/classify.hpp"
#include "eplab/errors.hpp"

using namespace eplab;

namespace {

ClassifyInput base(int N, double gamma, double E0, double beta = 0.0) {
  ClassifyInput in;
  in.N = N;
  in.gamma = gamma;
  in.E0 = E0;
  in.beta = beta;
  in.M = 1.0;
  in.K = 1.0;
  in.g = 1.0;
  in.domain_measure = 1.0;
  in.H0 = 1.0;
  in.Hdot0 = 0.0;
  return in;
}

}  // namespace

TEST_CASE("two-dimensional gap criterion") {
  auto in = base(2, 2.0, -0.3);
  in.sup_functional = 0.5;
  auto v = classify_blowup(in);
  CHECK(v.tag == TheoremTag::thm1_2d);
  CHECK(v.outcome == Outcome::finite_time_blowup);
  REQUIRE(v.bound);
  // 1 - 0.25 t^2 = 0
  CHECK(*v.bound == doctest::Approx(2.0).epsilon(1e-14));

  in.epsilon_margin = 0.6;
  CHECK(classify_blowup(in).tag == TheoremTag::inconclusive);
  in.epsilon_margin = 0.0;
  in.beta = 0.5;
  CHECK(classify_blowup(in).tag == TheoremTag::inconclusive);
  in.beta = 0.0;
  in.sup_functional.reset();
  CHECK(classify_blowup(in).tag == TheoremTag::inconclusive);
  in.epsilon = 0.0;
  CHECK_THROWS_AS(classify_blowup(in), InvalidInput);
  in.epsilon = 2.0;
  v = classify_blowup(in);
  CHECK(v.tag == TheoremTag::thm1_2d);
  CHECK(*v.bound == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("undamped high-dimensional blowup statements") {
  auto v = classify_blowup(base(4, 1.4, -1.0));
  CHECK(v.tag == TheoremTag::thm2_2a);
  REQUIRE(v.bound);
  // 1 - 2 t^2 = 0
  CHECK(*v.bound == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  v = classify_blowup(base(4, 1.4, 0.0));
  CHECK(v.tag == TheoremTag::thm2_2b);
  REQUIRE(v.bound);
  // c = (5.6 - 6) / 0.4 = -1, so 1 - t^2 = 0
  CHECK(*v.bound == doctest::Approx(1.0).epsilon(1e-12));

  auto in = base(4, 1.4, 0.0);
  in.domain_measure.reset();
  v = classify_blowup(in);
  CHECK(v.tag == TheoremTag::thm2_2b);
  CHECK_FALSE(v.bound);

  CHECK(classify_blowup(base(4, 1.6, -1.0)).tag == TheoremTag::inconclusive);
  CHECK(classify_blowup(base(4, 1.0, -1.0)).tag == TheoremTag::inconclusive);
  CHECK(classify_blowup(base(5, 1.4, -1.0)).tag == TheoremTag::thm2_2a);
  CHECK(classify_blowup(base(3, 1.2, -1.0)).tag == TheoremTag::inconclusive);
}

TEST_CASE("critical exponent with negative energy takes precedence") {
  auto v = classify_blowup(base(4, 1.5, -1.0));
  CHECK(v.tag == TheoremTag::remark_critical);
  CHECK(*v.bound == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(classify_blowup(base(4, 1.5, -1.0, 1.0)).tag == TheoremTag::remark_critical);
  CHECK(classify_blowup(base(6, 5.0 / 3.0, -1.0)).tag == TheoremTag::remark_critical);
}

TEST_CASE("expansion statements") {
  auto v = classify_blowup(base(3, 5.0 / 3.0, 2.0));
  CHECK(v.tag == TheoremTag::thm2_expansion);
  CHECK(v.outcome == Outcome::global_expansion_bound);
  CHECK(*v.bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  v = classify_blowup(base(4, 1.5, 2.0));
  CHECK(v.tag == TheoremTag::thm2_expansion);
  CHECK(*v.bound == doctest::Approx(2.0).epsilon(1e-14));

  auto in = base(3, 5.0 / 3.0, 0.0);
  in.domain_measure = 8.0;
  v = classify_blowup(in);
  CHECK(v.tag == TheoremTag::thm2_expansion);
  REQUIRE(v.expansion);
  CHECK(v.expansion->rate == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
  CHECK(v.expansion->weight_exponent == doctest::Approx(1.0 / 3.0));
  CHECK(*v.expansion->unweighted_rate == doctest::Approx(std::sqrt(1.5) / 2.0).epsilon(1e-14));

  CHECK(classify_blowup(base(3, 4.0 / 3.0, 0.0)).tag == TheoremTag::inconclusive);
  CHECK(classify_blowup(base(3, 5.0 / 3.0, 2.0, 0.5)).tag == TheoremTag::inconclusive);
  CHECK(classify_blowup(base(5, 1.7, 2.0)).tag == TheoremTag::inconclusive);
  CHECK_THROWS_AS(expansion_bound(5, 1.7, 1.0, 1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(expansion_bound(3, 1.2, 1.0, 1.0, 1.0), InvalidInput);
}

TEST_CASE("damped statements and their bound") {
  auto v = classify_blowup(base(4, 1.4, -1.0, 1.0));
  CHECK(v.tag == TheoremTag::thm3_1);
  REQUIRE(v.bound);
  // C1 + C2 e^{-t} + b t with b = -4, C2 = -4, C1 = 5.
  const auto f = [](double t) { return 5.0 - 4.0 * std::exp(-t) - 4.0 * t; };
  CHECK(std::abs(f(*v.bound)) < 1e-12);
  CHECK(f(0.5 * *v.bound) > 0.0);

  v = classify_blowup(base(4, 1.4, 0.0, 2.0));
  CHECK(v.tag == TheoremTag::thm3_2);
  REQUIRE(v.bound);
  // b = 2 c / beta = -1, C2 = -0.5, C1 = 1.5.
  const auto g = [](double t) { return 1.5 - 0.5 * std::exp(-2.0 * t) - t; };
  CHECK(std::abs(g(*v.bound)) < 1e-12);
}

TEST_CASE("energy sign tolerance") {
  CHECK(energy_zero_tolerance(0.5) == 1e-10);
  CHECK(energy_zero_tolerance(1e4) == doctest::Approx(1e-6));
  CHECK(classify_blowup(base(4, 1.4, 5e-11)).tag == TheoremTag::thm2_2b);
  CHECK(classify_blowup(base(4, 1.4, -5e-10)).tag == TheoremTag::thm2_2a);
  auto in = base(4, 1.4, -5e-10);
  in.energy_scale = 1e2;
  CHECK(classify_blowup(in).tag == TheoremTag::thm2_2b);
}

TEST_CASE("bound roots and errors") {
  BoundParams p;
  p.N = 4;
  p.E0 = -0.5;
  // 1 + t - t^2
  CHECK(blowup_time_bound(TheoremTag::thm2_2a, 1.0, 1.0, p) ==
        doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(blowup_time_bound(TheoremTag::thm2_2a, 0.0, -1.0, p), InvalidInput);
  CHECK_THROWS_AS(blowup_time_bound(TheoremTag::thm2_expansion, 1.0, 0.0, p), InvalidInput);
  p.E0 = 0.5;
  CHECK_THROWS_AS(blowup_time_bound(TheoremTag::thm2_2a, 1.0, 0.0, p), InvalidInput);

  auto in = base(4, 1.4, -1.0);
  in.E0 = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(classify_blowup(in), InvalidInput);
  in = base(1, 1.4, -1.0);
  CHECK_THROWS_AS(classify_blowup(in), InvalidInput);
  in = base(4, 1.4, -1.0, -1.0);
  CHECK_THROWS_AS(classify_blowup(in), InvalidInput);
}

TEST_CASE("tag names round-trip") {
  for (auto t : {TheoremTag::thm1_2d, TheoremTag::thm2_expansion, TheoremTag::thm2_2a,
                 TheoremTag::thm2_2b, TheoremTag::thm3_1, TheoremTag::thm3_2,
                 TheoremTag::remark_critical, TheoremTag::inconclusive}) {
    CHECK(parse_theorem_tag(to_string(t)) == t);
  }
  CHECK(to_string(Outcome::finite_time_blowup) == "finite-time-blowup");
  CHECK_THROWS_AS(parse_theorem_tag("Thm9"), InvalidInput);
}
