#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "pricing/errors.hpp"
#include "pricing/exact.hpp"
#include "pricing/support2.hpp"
#include "test_support.hpp"

using namespace pricing;

namespace {

Support2Instance<Rational> plain(std::vector<std::array<int, 2>> ab, std::vector<Rational> q) {
  Support2Instance<Rational> inst;
  for (std::size_t i = 0; i < ab.size(); ++i)
    inst.push_back({Rational(ab[i][0]), Rational(ab[i][1]), q[i]});
  return inst;
}

std::set<std::vector<Rational>> as_set(const std::vector<std::vector<Rational>>& cands) {
  return {cands.begin(), cands.end()};
}

}  // namespace

TEST_CASE("non-degeneracy checks") {
  CHECK(is_nondegenerate(plain({{1, 3}, {2, 6}}, {Rational(1, 2), Rational(1, 2)})));
  // equal gaps: 3-1 == 4-2
  CHECK(!is_nondegenerate(plain({{1, 3}, {2, 4}}, {Rational(1, 2), Rational(1, 2)})));
  // q = 1 is a point mass in disguise
  CHECK(!is_nondegenerate(plain({{1, 3}}, {Rational(1)})));
  // equal highs
  CHECK(!is_nondegenerate(plain({{1, 5}, {2, 5}}, {Rational(1, 2), Rational(1, 2)})));
  // equal lows
  CHECK(!is_nondegenerate(plain({{1, 3}, {1, 6}}, {Rational(1, 2), Rational(1, 2)})));
  // zero low
  CHECK(!is_nondegenerate(plain({{0, 3}, {2, 6}}, {Rational(1, 2), Rational(1, 2)})));
}

TEST_CASE("candidate enumeration") {
  SUBCASE("two items") {
    const auto inst = plain({{1, 3}, {2, 6}}, {Rational(1, 2), Rational(1, 2)});
    const auto cands = as_set(enumerate_candidates(inst));
    const std::set<std::vector<Rational>> expected{
        {Rational(3), Rational(6)},
        {Rational(1), Rational(6)},
        {Rational(1), Rational(4)},
        {Rational(3), Rational(2)},
    };
    CHECK(cands == expected);
  }
  SUBCASE("single item") {
    const auto cands = as_set(enumerate_candidates(plain({{1, 3}}, {Rational(1, 2)})));
    const std::set<std::vector<Rational>> expected{{Rational(3)}, {Rational(1)}};
    CHECK(cands == expected);
  }
  SUBCASE("size bound") {
    testing::Rng rng(61);
    for (int round = 0; round < 60; ++round) {
      Support2Instance<Rational> inst;
      const std::size_t n = static_cast<std::size_t>(testing::pick(rng, 1, 6));
      std::set<std::int64_t> highs, lows, gaps;
      while (inst.size() < n) {
        const std::int64_t lo = testing::pick(rng, 1, 40);
        const std::int64_t hi = testing::pick(rng, lo + 1, 60);
        if (!highs.insert(hi).second || !lows.insert(lo).second || !gaps.insert(hi - lo).second)
          continue;
        const std::int64_t den = 1 << testing::pick(rng, 1, 4);
        inst.push_back({Rational(lo), Rational(hi), Rational(testing::pick(rng, 1, den - 1), den)});
      }
      std::sort(inst.begin(), inst.end(),
                [](const auto& x, const auto& y) { return x.high < y.high; });
      if (!is_nondegenerate(inst)) continue;
      const auto cands = enumerate_candidates(inst);
      CHECK(cands.size() <= 1 + n * (n + 1) / 2);
      CHECK(as_set(cands).size() == cands.size());  // no duplicates
    }
  }
  SUBCASE("degenerate input is rejected") {
    CHECK_THROWS_AS(enumerate_candidates(plain({{1, 3}, {2, 4}}, {Rational(1, 2), Rational(1, 2)})),
                    Error);
  }
}

TEST_CASE("solve_nondegenerate frozen examples") {
  SUBCASE("two items") {
    const auto [prices, revenue] =
        solve_nondegenerate(plain({{1, 3}, {2, 6}}, {Rational(1, 2), Rational(1, 2)}));
    CHECK(prices == std::vector<Rational>{Rational(3), Rational(6)});
    CHECK(revenue == Rational(15, 4));
  }
  SUBCASE("single item keeps the high price when 3q >= a") {
    const auto [prices, revenue] = solve_nondegenerate(plain({{1, 3}}, {Rational(1, 2)}));
    CHECK(prices == std::vector<Rational>{Rational(3)});
    CHECK(revenue == Rational(3, 2));
  }
  SUBCASE("single item drops to the low price when a > bq") {
    const auto [prices, revenue] = solve_nondegenerate(plain({{2, 3}}, {Rational(1, 2)}));
    CHECK(prices == std::vector<Rational>{Rational(2)});
    CHECK(revenue == 2);
  }
}

TEST_CASE("perturbation") {
  SUBCASE("point mass and a two-point item") {
    // item {1,5} sorts first (high 5 < 5? equal highs: stable order keeps
    // the earlier item first) -- here items arrive pre-sorted
    const std::vector<RawSupport2Item> sorted{{Rational(1), Rational(5), Rational(1, 2)},
                                              {Rational(5), Rational(5), Rational(1)}};
    const auto perturbed = perturb_instance(sorted);
    REQUIRE(perturbed.size() == 2);
    CHECK(perturbed[0].low == EpsAffine(Rational(1), Rational(1)));
    CHECK(perturbed[0].high == EpsAffine(Rational(5), Rational(2)));
    CHECK(perturbed[0].q_high == Rational(1, 2));
    CHECK(perturbed[1].low == EpsAffine(Rational(5), Rational(2)));
    CHECK(perturbed[1].high == EpsAffine(Rational(5), Rational(4)));
    CHECK(perturbed[1].q_high == Rational(1, 2));
    CHECK(is_nondegenerate(perturbed));
  }
  SUBCASE("already non-degenerate items keep their probabilities") {
    const std::vector<RawSupport2Item> sorted{{Rational(1), Rational(3), Rational(1, 4)},
                                              {Rational(2), Rational(6), Rational(3, 4)}};
    const auto perturbed = perturb_instance(sorted);
    CHECK(perturbed[0].low == EpsAffine(Rational(1), Rational(1)));
    CHECK(perturbed[0].high == EpsAffine(Rational(3), Rational(2)));
    CHECK(perturbed[0].q_high == Rational(1, 4));
    CHECK(perturbed[1].high == EpsAffine(Rational(6), Rational(4)));
    CHECK(is_nondegenerate(perturbed));
  }
  SUBCASE("equal highs become ordered through the eps term") {
    const std::vector<RawSupport2Item> sorted{{Rational(2), Rational(7), Rational(1, 2)},
                                              {Rational(3), Rational(7), Rational(1, 2)}};
    const auto perturbed = perturb_instance(sorted);
    CHECK(perturbed[0].high < perturbed[1].high);
    CHECK(is_nondegenerate(perturbed));
  }
}

TEST_CASE("solve_support2 on the worked example") {
  PricingInstance inst;
  inst.items.push_back({{Rational(10)}, {Rational(1)}});
  inst.items.push_back({{Rational(8), Rational(12)}, {Rational(1, 2), Rational(1, 2)}});
  const auto result = solve_support2(validate_instance(std::move(inst)));
  CHECK(result.revenue == 11);
  CHECK(result.prices == PriceVector{Rational(10), Rational(12)});
}

TEST_CASE("solve_support2 equals solve_nondegenerate on clean instances") {
  const std::vector<RawSupport2Item> items{{Rational(1), Rational(3), Rational(1, 2)},
                                           {Rational(2), Rational(6), Rational(1, 2)}};
  const auto result = solve_support2(items);
  CHECK(result.revenue == Rational(15, 4));
  CHECK(result.prices == PriceVector{Rational(3), Rational(6)});
}

TEST_CASE("solve_support2 rejects wide supports") {
  PricingInstance inst;
  inst.items.push_back({{Rational(0), Rational(1), Rational(3)},
                        {Rational(1, 3), Rational(1, 3), Rational(1, 3)}});
  CHECK_THROWS_AS(solve_support2(validate_instance(std::move(inst))), Error);
}

TEST_CASE("solver matches the grid oracle, degeneracies included") {
  testing::Rng rng(67);
  for (int round = 0; round < 80; ++round) {
    const auto items = testing::random_support2(rng, 5, 30);
    const auto inst = support2_instance(items);
    const auto fast = solve_support2(items);
    const auto oracle = grid_solve(inst);
    CHECK(fast.revenue == oracle.revenue);

    bool nondegenerate_two_point = true;
    for (std::size_t i = 0; i < items.size() && nondegenerate_two_point; ++i) {
      if (inst.items[i].support_size() != 2) nondegenerate_two_point = false;
    }
    if (nondegenerate_two_point) {
      Support2Instance<Rational> typed;
      for (const auto& item : inst.items)
        typed.push_back({item.values[0], item.values[1], item.probs[1]});
      std::stable_sort(typed.begin(), typed.end(),
                       [](const auto& x, const auto& y) { return x.high < y.high; });
      if (is_nondegenerate(typed)) {
        // no optimal vector parks two coordinates at the low value
        std::size_t at_low = 0;
        for (std::size_t i = 0; i < typed.size(); ++i)
          if (oracle.prices[i] == inst.items[i].min_value()) ++at_low;
        CHECK(at_low <= 1);
        // and the structured candidate set reaches the optimum
        const auto [cand_prices, cand_revenue] = solve_nondegenerate(typed);
        CHECK(cand_revenue == oracle.revenue);
      }
    }
  }
}
