#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pricing/eps_affine.hpp"
#include "pricing/errors.hpp"
#include "pricing/model.hpp"
#include "pricing/revenue.hpp"

namespace pricing {

// One two-point item: value `low` with probability 1 - q_high, value `high`
// with probability q_high. The scalar S is Rational for concrete instances
// and EpsAffine for symbolically perturbed ones.
template <class S>
struct Support2Item {
  S low;
  S high;
  Rational q_high;

  S gap() const { return high - low; }  // t_i = b_i - a_i
};

template <class S>
using Support2Instance = std::vector<Support2Item<S>>;

// Raw per-item view accepted by the general solver: q_high may be 0 or 1 and
// low may equal high; both collapse to point masses before perturbation.
struct RawSupport2Item {
  Rational low;
  Rational high;
  Rational q_high;
};

// The five conditions of the structured case: highs strictly ascending, lows
// pairwise distinct, gaps pairwise distinct, lows positive, q in (0,1).
template <class S>
bool is_nondegenerate(const Support2Instance<S>& inst) {
  const std::size_t n = inst.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& it = inst[i];
    if (!(it.low < it.high)) return false;
    if (!(it.low > S(Rational(0)))) return false;
    if (it.q_high <= 0 || it.q_high >= 1) return false;
    if (i + 1 < n && !(it.high < inst[i + 1].high)) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (it.low == inst[j].low) return false;
      if (it.gap() == inst[j].gap()) return false;
    }
  }
  return true;
}

// The candidate set A containing every optimal price vector of a
// non-degenerate instance: the all-high vector, plus for each anchor k and
// each cut position the vector with p_k = low_k, full price for every item
// before k and every later item with a smaller gap, and the remaining items
// (larger gaps, ascending index) split into a full-price prefix and a suffix
// discounted by gap_k. |A| <= 1 + n(n+1)/2.
template <class S>
std::vector<std::vector<S>> enumerate_candidates(const Support2Instance<S>& inst) {
  if (!is_nondegenerate(inst))
    fail(Errc::DegenerateInstance, "candidate enumeration requires the non-degenerate form");
  const std::size_t n = inst.size();
  std::vector<std::vector<S>> out;

  std::vector<S> all_high(n);
  for (std::size_t i = 0; i < n; ++i) all_high[i] = inst[i].high;
  out.push_back(all_high);

  for (std::size_t k = 0; k < n; ++k) {
    const S gap_k = inst[k].gap();
    std::vector<std::size_t> larger;  // T_k: later items with a larger gap
    for (std::size_t i = k + 1; i < n; ++i)
      if (inst[i].gap() > gap_k) larger.push_back(i);

    for (std::size_t cut = 0; cut <= larger.size(); ++cut) {
      std::vector<S> cand = all_high;
      cand[k] = inst[k].low;
      for (std::size_t pos = cut; pos < larger.size(); ++pos)
        cand[larger[pos]] = inst[larger[pos]].high - gap_k;
      out.push_back(std::move(cand));
    }
  }
  return out;
}

namespace detail {

template <class S>
std::vector<WeightedSupport<S>> support2_weighted(const Support2Instance<S>& inst) {
  std::vector<WeightedSupport<S>> items(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    items[i].values = {inst[i].low, inst[i].high};
    items[i].probs = {Rational(1) - inst[i].q_high, inst[i].q_high};
  }
  return items;
}

}  // namespace detail

// Exhausts the candidate set; the best member is a global optimum.
template <class S>
std::pair<std::vector<S>, S> solve_nondegenerate(const Support2Instance<S>& inst) {
  const auto items = detail::support2_weighted(inst);
  std::vector<std::vector<S>> cands = enumerate_candidates(inst);
  std::vector<S> best_prices;
  S best_revenue{};
  bool first = true;
  for (auto& cand : cands) {
    S rev = detail::expected_revenue_impl(items, cand);
    if (first || best_revenue < rev) {
      best_revenue = std::move(rev);
      best_prices = std::move(cand);
      first = false;
    }
  }
  return {std::move(best_prices), std::move(best_revenue)};
}

// Shifts item i (1-based position within the ascending-high order) to
// {low + i*eps, high + 2i*eps}; point masses {v} become {v + i*eps, v + 2i*eps}
// with probability 1/2 each. The result is always non-degenerate in the
// EpsAffine order. Items must arrive pre-sorted by high ascending.
Support2Instance<EpsAffine> perturb_instance(const std::vector<RawSupport2Item>& sorted_items);

// The distribution the raw items describe, with q_high in {0, 1} and
// low == high collapsed to point masses.
PricingInstance support2_instance(const std::vector<RawSupport2Item>& items);

// Full pipeline for arbitrary instances with all supports of size <= 2:
// collapse degenerate q, stable-sort by high value, perturb, solve the
// non-degenerate instance symbolically and take the eps -> 0 limit. The
// returned prices are re-checked against the unperturbed instance; a mismatch
// with the limit revenue throws LimitMismatch.
SolveResult solve_support2(std::vector<RawSupport2Item> items);
SolveResult solve_support2(const PricingInstance& inst);

}  // namespace pricing
