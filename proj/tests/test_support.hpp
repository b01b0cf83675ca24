#pragma once

// Deterministic random generators shared by the property suites and the
// acceptance runner. Everything is seeded; reruns are bit-identical.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pricing/model.hpp"
#include "pricing/support2.hpp"

namespace pricing::testing {

using Rng = std::mt19937_64;

inline std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Positive dyadic probabilities summing to exactly 1: split 2^e into
// `count` positive integer weights.
inline std::vector<Rational> random_dyadic_probs(Rng& rng, std::size_t count) {
  const int e = static_cast<int>(pick(rng, 3, 7));
  const std::int64_t total = std::int64_t(1) << e;
  std::vector<std::int64_t> weights(count, 1);
  std::int64_t rest = total - static_cast<std::int64_t>(count);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const std::int64_t take = pick(rng, 0, rest);
    weights[i] += take;
    rest -= take;
  }
  weights.back() += rest;
  std::shuffle(weights.begin(), weights.end(), rng);
  std::vector<Rational> probs;
  probs.reserve(count);
  for (auto w : weights) probs.emplace_back(w, total);
  return probs;
}

// Instance with n <= max_items items, supports of size <= max_support, and
// values bounded by max_value. Integer values when halves == false,
// otherwise a mix of integers and half-integers.
inline PricingInstance random_instance(Rng& rng, std::size_t max_items,
                                       std::size_t max_support, std::int64_t max_value,
                                       bool halves = false) {
  PricingInstance inst;
  const std::size_t n = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(max_items)));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t support =
        static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(max_support)));
    std::set<Rational> values;
    while (values.size() < support) {
      Rational v(pick(rng, 0, max_value));
      if (halves && pick(rng, 0, 1) == 1) v += Rational(1, 2);
      values.insert(v);
    }
    ValueDistribution d;
    d.values.assign(values.begin(), values.end());
    d.probs = random_dyadic_probs(rng, support);
    inst.items.push_back(std::move(d));
  }
  return validate_instance(std::move(inst));
}

// Random price vector; roughly half the coordinates inside the search box,
// the rest anywhere in [0, max b + slack].
inline PriceVector random_prices(Rng& rng, const PricingInstance& inst, std::int64_t slack = 5) {
  PriceVector prices;
  for (const auto& item : inst.items) {
    if (pick(rng, 0, 1) == 0 && is_integer(item.min_value()) && is_integer(item.max_value())) {
      const std::int64_t lo = static_cast<std::int64_t>(to_integer(item.min_value()));
      const std::int64_t hi = static_cast<std::int64_t>(to_integer(item.max_value()));
      prices.emplace_back(pick(rng, lo, hi));
    } else {
      const Integer num = numerator(item.max_value());
      const Integer den = denominator(item.max_value());
      const std::int64_t hi = static_cast<std::int64_t>(Integer((num + den - 1) / den));
      prices.emplace_back(Rational(pick(rng, 0, 2 * (hi + slack)), 2));
    }
  }
  return prices;
}

// Integer support-2 items with deliberate degeneracies mixed in: duplicate
// highs, duplicate gaps, point masses, q in {0,1}, zero lows. The product of
// grid spans stays below grid_cap so the oracle stays fast.
inline std::vector<RawSupport2Item> random_support2(Rng& rng, std::size_t max_items,
                                                    std::int64_t max_value,
                                                    std::uint64_t grid_cap = 40000) {
  const std::size_t n = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(max_items)));
  std::vector<RawSupport2Item> items;
  std::uint64_t grid = 1;
  for (std::size_t i = 0; i < n; ++i) {
    RawSupport2Item raw;
    const std::int64_t kind = pick(rng, 0, 9);
    std::int64_t lo = pick(rng, 0, max_value - 1);
    std::int64_t hi = pick(rng, lo + 1, max_value);
    if (!items.empty()) {
      const auto& prev = items[pick(rng, 0, static_cast<std::int64_t>(items.size()) - 1)];
      if (kind == 0 && is_integer(prev.high)) {  // duplicate high value
        hi = static_cast<std::int64_t>(to_integer(prev.high));
        if (hi == 0) hi = 1;
        lo = pick(rng, 0, hi - 1);
      } else if (kind == 1) {  // duplicate gap
        const std::int64_t gap =
            static_cast<std::int64_t>(to_integer(prev.high - prev.low));
        if (gap >= 1 && gap < max_value) {
          lo = pick(rng, 0, max_value - gap);
          hi = lo + gap;
        }
      }
    }
    raw.low = lo;
    raw.high = hi;
    if (kind == 2) {  // point mass
      raw.low = raw.high;
      raw.q_high = 1;
    } else if (kind == 3) {
      raw.q_high = pick(rng, 0, 1);  // q in {0,1}
    } else {
      const std::int64_t den = std::int64_t(1) << pick(rng, 1, 5);
      raw.q_high = Rational(pick(rng, 1, den - 1), den);
    }
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    if (grid > grid_cap / span) {
      raw.low = raw.high;  // keep the grid small: collapse to a point
      raw.q_high = 1;
    } else {
      grid *= span;
    }
    items.push_back(std::move(raw));
  }
  return items;
}

}  // namespace pricing::testing
