#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pricing/rational.hpp"

namespace pricing {

// One item's value distribution: support values in strictly ascending order,
// all >= 0, with positive probabilities summing to exactly 1.
struct ValueDistribution {
  std::vector<Rational> values;
  std::vector<Rational> probs;

  const Rational& min_value() const { return values.front(); }
  const Rational& max_value() const { return values.back(); }
  std::size_t support_size() const { return values.size(); }
};

// n independent items. The search box for optimal prices is
// X_i [min_value_i, max_value_i].
struct PricingInstance {
  std::vector<ValueDistribution> items;

  std::size_t size() const { return items.size(); }
};

using PriceVector = std::vector<Rational>;

struct SolveResult {
  PriceVector prices;
  Rational revenue;
};

// Checks every ValueDistribution invariant; returns the instance unchanged on
// success. Throws Error with one of: EmptyInstance, LengthMismatch,
// NonAscendingSupport, NegativeValue, NonPositiveProb, ProbSumNotOne.
PricingInstance validate_instance(PricingInstance raw);

// Multiplies every support value by the least common multiple of all value
// denominators, leaving probabilities untouched. Returns the scaled instance
// and the factor. Revenues scale by the same factor.
std::pair<PricingInstance, Rational> scale_to_integer(const PricingInstance& inst);

// True iff every support value is an integer.
bool has_integer_values(const PricingInstance& inst);

}  // namespace pricing
