#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pricing/eps_affine.hpp"
#include "pricing/errors.hpp"
#include "pricing/model.hpp"

namespace pricing {

// MaxPriceThenMinIndex is the rule everything else in the library assumes:
// among items of maximum nonnegative utility the buyer takes the one with the
// highest price, smallest index among those. Under it the revenue supremum is
// attained. MinIndex / MaxIndex exist for the dominance tests only.
enum class TieBreakRule { MaxPriceThenMinIndex, MinIndex, MaxIndex };

struct WinProbabilities {
  std::vector<Rational> gamma;  // gamma[i] = Pr[buyer selects item i]
};

// The item the buyer picks for one concrete valuation vector, or nullopt if
// every utility is negative. Checks v_i in V_i.
std::optional<std::size_t> buyer_choice(const PricingInstance& inst,
                                        const std::vector<Rational>& valuation,
                                        const PriceVector& prices, TieBreakRule rule);

// Direct sum over all valuation vectors in X_i V_i; exact but exponential.
// Serves as the independent oracle for the factorized evaluator.
Rational expected_revenue_naive(const PricingInstance& inst, const PriceVector& prices,
                                TieBreakRule rule, std::uint64_t budget = 1000000);

// Factorized exact evaluation under MaxPriceThenMinIndex:
// Pr[i wins with value s] splits into a product of independent per-item
// events, so the whole computation is O(n^2 * max|V_i|) arithmetic ops.
Rational expected_revenue(const PricingInstance& inst, const PriceVector& prices);

// Same factorization with symbolic first-order prices. Valuations stay
// rational; utility comparisons happen in the lexicographic EpsAffine order.
EpsAffine expected_revenue(const PricingInstance& inst, const std::vector<EpsAffine>& prices);

WinProbabilities win_probabilities(const PricingInstance& inst, const PriceVector& prices);

namespace detail {

// One item generalized over the value scalar: Rational for concrete
// instances, EpsAffine for symbolically perturbed ones. Probabilities are
// always rational.
template <class S>
struct WeightedSupport {
  std::vector<S> values;
  std::vector<Rational> probs;
};

// Whether item j holding value vj loses to item i holding value si under the
// max-price rule, i.e. the buyer prefers i. Requires i != j.
template <class S>
bool loses_to(const S& vj, const S& pj, std::size_t j, const S& si, const S& pi, std::size_t i) {
  const S uj = vj - pj;
  const S ui = si - pi;
  if (uj != ui) return uj < ui;
  if (pj != pi) return pj < pi;
  return j > i;
}

template <class S>
std::vector<Rational> win_probabilities_impl(const std::vector<WeightedSupport<S>>& items,
                                             const std::vector<S>& prices) {
  const std::size_t n = items.size();
  if (prices.size() != n) fail(Errc::DimensionMismatch, "price vector length != item count");
  std::vector<Rational> gamma(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < items[i].values.size(); ++k) {
      const S& si = items[i].values[k];
      if (si < prices[i]) continue;  // utility negative, i cannot win with this value
      Rational term = items[i].probs[k];
      for (std::size_t j = 0; j < n && term != 0; ++j) {
        if (j == i) continue;
        Rational lose(0);
        for (std::size_t l = 0; l < items[j].values.size(); ++l)
          if (loses_to(items[j].values[l], prices[j], j, si, prices[i], i))
            lose += items[j].probs[l];
        term *= lose;
      }
      gamma[i] += term;
    }
  }
  return gamma;
}

template <class S>
S expected_revenue_impl(const std::vector<WeightedSupport<S>>& items,
                        const std::vector<S>& prices) {
  const std::vector<Rational> gamma = win_probabilities_impl(items, prices);
  S total{};
  for (std::size_t i = 0; i < items.size(); ++i) total += prices[i] * gamma[i];
  return total;
}

std::vector<WeightedSupport<Rational>> as_weighted(const PricingInstance& inst);
std::vector<WeightedSupport<EpsAffine>> as_weighted_eps(const PricingInstance& inst);

}  // namespace detail

}  // namespace pricing
