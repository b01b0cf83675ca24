#include <doctest.h>

#include <functional>

#include "pricing/eps_affine.hpp"
#include "pricing/errors.hpp"
#include "pricing/model.hpp"
#include "pricing/revenue.hpp"
#include "test_support.hpp"

using namespace pricing;

namespace {

PricingInstance make(std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> items) {
  PricingInstance inst;
  for (auto& [values, probs] : items) inst.items.push_back({std::move(values), std::move(probs)});
  return inst;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::Internal;
}

}  // namespace

TEST_CASE("rational parse and format round-trip") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));  // normalized on input
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational("a"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);

  testing::Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    const Integer a(testing::pick(rng, -1000000, 1000000));
    const Integer b(testing::pick(rng, 1, 1000000));
    const Rational r(a, b);
    CHECK(parse_rational(to_string(r)) == r);
    CHECK(r * b == Rational(a));  // normalize(a/b) * b == a
  }
}

TEST_CASE("validate_instance accepts the two-item worked example") {
  auto inst = validate_instance(make({{{Rational(10)}, {Rational(1)}},
                                      {{Rational(8), Rational(12)}, {Rational(1, 2), Rational(1, 2)}}}));
  CHECK(inst.size() == 2);
  CHECK(inst.items[1].min_value() == 8);
  CHECK(inst.items[1].max_value() == 12);
}

TEST_CASE("validate_instance rejections") {
  CHECK(code_of([] { validate_instance(PricingInstance{}); }) == Errc::EmptyInstance);
  CHECK(code_of([] {
          validate_instance(make({{{Rational(5), Rational(3)}, {Rational(1, 2), Rational(1, 2)}}}));
        }) == Errc::NonAscendingSupport);
  CHECK(code_of([] {
          validate_instance(make({{{Rational(1), Rational(2)}, {Rational(1, 3), Rational(1, 3)}}}));
        }) == Errc::ProbSumNotOne);
  CHECK(code_of([] {
          validate_instance(make({{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}}));
        }) == Errc::NonPositiveProb);
  CHECK(code_of([] {
          validate_instance(make({{{Rational(-1), Rational(2)}, {Rational(1, 2), Rational(1, 2)}}}));
        }) == Errc::NegativeValue);
  CHECK(code_of([] {
          validate_instance(make({{{Rational(1), Rational(2)}, {Rational(1)}}}));
        }) == Errc::LengthMismatch);
}

TEST_CASE("scale_to_integer") {
  SUBCASE("rational values") {
    auto inst = validate_instance(
        make({{{Rational(1, 2), Rational(3, 2)}, {Rational(1, 2), Rational(1, 2)}},
              {{Rational(1, 3)}, {Rational(1)}}}));
    auto [scaled, factor] = scale_to_integer(inst);
    CHECK(factor == 6);
    CHECK(scaled.items[0].values == std::vector<Rational>{Rational(3), Rational(9)});
    CHECK(scaled.items[1].values == std::vector<Rational>{Rational(2)});
    CHECK(scaled.items[0].probs == inst.items[0].probs);
  }
  SUBCASE("integer instance is untouched") {
    auto inst = validate_instance(make({{{Rational(10)}, {Rational(1)}},
                                        {{Rational(8), Rational(12)}, {Rational(1, 2), Rational(1, 2)}}}));
    auto [scaled, factor] = scale_to_integer(inst);
    CHECK(factor == 1);
    CHECK(scaled.items[0].values == inst.items[0].values);
    CHECK(scaled.items[1].values == inst.items[1].values);
  }
}

TEST_CASE("scaling covariance of revenue") {
  testing::Rng rng(11);
  for (int round = 0; round < 60; ++round) {
    auto inst = testing::random_instance(rng, 4, 3, 12, /*halves=*/true);
    auto prices = testing::random_prices(rng, inst);
    auto [scaled, factor] = scale_to_integer(inst);
    PriceVector scaled_prices;
    for (const auto& p : prices) scaled_prices.push_back(p * factor);
    CHECK(expected_revenue(scaled, scaled_prices) == factor * expected_revenue(inst, prices));
  }
}

TEST_CASE("EpsAffine ordering is a strict total order") {
  const EpsAffine zero;
  CHECK(EpsAffine(Rational(0), Rational(1)) > zero);
  CHECK(EpsAffine(Rational(0), Rational(-1)) < zero);
  CHECK(EpsAffine(Rational(1), Rational(-100)) > EpsAffine(Rational(0), Rational(100)));

  testing::Rng rng(13);
  auto random_eps = [&rng]() {
    return EpsAffine(Rational(testing::pick(rng, -6, 6), testing::pick(rng, 1, 4)),
                     Rational(testing::pick(rng, -6, 6), testing::pick(rng, 1, 4)));
  };
  for (int round = 0; round < 500; ++round) {
    const EpsAffine a = random_eps(), b = random_eps(), c = random_eps();
    // exactly one of <, ==, > holds
    int holds = (a < b) + (a == b) + (b < a);
    CHECK(holds == 1);
    if (a < b && b < c) CHECK(a < c);
    if (a <= b && b <= c) CHECK(a <= c);
  }
}

TEST_CASE("EpsAffine arithmetic") {
  const EpsAffine x(Rational(3), Rational(-1));
  const EpsAffine y(Rational(1, 2), Rational(2));
  CHECK(x + y == EpsAffine(Rational(7, 2), Rational(1)));
  CHECK(x - y == EpsAffine(Rational(5, 2), Rational(-3)));
  CHECK(x * Rational(2) == EpsAffine(Rational(6), Rational(-2)));
  CHECK(x * EpsAffine(Rational(2)) == EpsAffine(Rational(6), Rational(-2)));
  // both factors carrying eps would need an eps^2 term
  CHECK_THROWS_AS(x * y, Error);
}
