#include "pricing/revenue.hpp"

#include <algorithm>

namespace pricing {

namespace detail {

std::vector<WeightedSupport<Rational>> as_weighted(const PricingInstance& inst) {
  std::vector<WeightedSupport<Rational>> out(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i)
    out[i] = {inst.items[i].values, inst.items[i].probs};
  return out;
}

std::vector<WeightedSupport<EpsAffine>> as_weighted_eps(const PricingInstance& inst) {
  std::vector<WeightedSupport<EpsAffine>> out(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out[i].probs = inst.items[i].probs;
    out[i].values.reserve(inst.items[i].values.size());
    for (const auto& v : inst.items[i].values) out[i].values.emplace_back(v);
  }
  return out;
}

}  // namespace detail

std::optional<std::size_t> buyer_choice(const PricingInstance& inst,
                                        const std::vector<Rational>& valuation,
                                        const PriceVector& prices, TieBreakRule rule) {
  const std::size_t n = inst.size();
  if (valuation.size() != n || prices.size() != n)
    fail(Errc::DimensionMismatch, "valuation/price vector length != item count");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& vals = inst.items[i].values;
    if (std::find(vals.begin(), vals.end(), valuation[i]) == vals.end())
      fail(Errc::ValueNotInSupport,
           "item " + std::to_string(i + 1) + " cannot take value " + to_string(valuation[i]));
  }

  std::optional<std::size_t> best;
  Rational best_utility(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational utility = valuation[i] - prices[i];
    if (utility < 0) continue;
    if (!best || utility > best_utility) {
      best = i;
      best_utility = utility;
      continue;
    }
    if (utility < best_utility) continue;
    switch (rule) {
      case TieBreakRule::MaxPriceThenMinIndex:
        if (prices[i] > prices[*best]) best = i;  // smaller index kept on equal price
        break;
      case TieBreakRule::MinIndex:
        break;  // earlier index already held
      case TieBreakRule::MaxIndex:
        best = i;
        break;
    }
  }
  return best;
}

Rational expected_revenue_naive(const PricingInstance& inst, const PriceVector& prices,
                                TieBreakRule rule, std::uint64_t budget) {
  const std::size_t n = inst.size();
  if (prices.size() != n) fail(Errc::DimensionMismatch, "price vector length != item count");

  std::uint64_t count = 1;
  for (const auto& item : inst.items) {
    if (count > budget / item.values.size())
      fail(Errc::EnumerationTooLarge, "valuation space exceeds budget");
    count *= item.values.size();
  }

  std::vector<std::size_t> idx(n, 0);
  std::vector<Rational> valuation(n);
  Rational total(0);
  for (std::uint64_t step = 0; step < count; ++step) {
    Rational prob(1);
    for (std::size_t i = 0; i < n; ++i) {
      valuation[i] = inst.items[i].values[idx[i]];
      prob *= inst.items[i].probs[idx[i]];
    }
    if (auto chosen = buyer_choice(inst, valuation, prices, rule))
      total += prob * prices[*chosen];
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < inst.items[i].values.size()) break;
      idx[i] = 0;
    }
  }
  return total;
}

Rational expected_revenue(const PricingInstance& inst, const PriceVector& prices) {
  return detail::expected_revenue_impl(detail::as_weighted(inst), prices);
}

EpsAffine expected_revenue(const PricingInstance& inst, const std::vector<EpsAffine>& prices) {
  return detail::expected_revenue_impl(detail::as_weighted_eps(inst), prices);
}

WinProbabilities win_probabilities(const PricingInstance& inst, const PriceVector& prices) {
  return {detail::win_probabilities_impl(detail::as_weighted(inst), prices)};
}

}  // namespace pricing
