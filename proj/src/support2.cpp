#include "pricing/support2.hpp"

#include <algorithm>
#include <numeric>

namespace pricing {

Support2Instance<EpsAffine> perturb_instance(const std::vector<RawSupport2Item>& sorted_items) {
  Support2Instance<EpsAffine> out;
  out.reserve(sorted_items.size());
  for (std::size_t pos = 0; pos < sorted_items.size(); ++pos) {
    const auto& raw = sorted_items[pos];
    if (pos + 1 < sorted_items.size() && raw.high > sorted_items[pos + 1].high)
      fail(Errc::Internal, "perturb_instance expects items sorted by high value");
    const Rational rank(pos + 1);
    Support2Item<EpsAffine> item;
    if (raw.q_high == 1 || raw.low == raw.high || raw.q_high == 0) {
      const Rational point = raw.q_high == 0 ? raw.low : raw.high;
      item.low = EpsAffine(point, rank);
      item.high = EpsAffine(point, 2 * rank);
      item.q_high = Rational(1, 2);
    } else {
      item.low = EpsAffine(raw.low, rank);
      item.high = EpsAffine(raw.high, 2 * rank);
      item.q_high = raw.q_high;
    }
    out.push_back(std::move(item));
  }
  return out;
}

PricingInstance support2_instance(const std::vector<RawSupport2Item>& items) {
  PricingInstance inst;
  for (const auto& raw : items) {
    ValueDistribution d;
    if (raw.q_high == 1 || raw.low == raw.high) {
      d.values = {raw.high};
      d.probs = {Rational(1)};
    } else if (raw.q_high == 0) {
      d.values = {raw.low};
      d.probs = {Rational(1)};
    } else {
      d.values = {raw.low, raw.high};
      d.probs = {Rational(1) - raw.q_high, raw.q_high};
    }
    inst.items.push_back(std::move(d));
  }
  return validate_instance(std::move(inst));
}

SolveResult solve_support2(std::vector<RawSupport2Item> items) {
  if (items.empty()) fail(Errc::EmptyInstance, "no items");
  for (const auto& raw : items) {
    if (raw.low < 0 || raw.high < raw.low)
      fail(Errc::NegativeValue, "need 0 <= low <= high");
    if (raw.q_high < 0 || raw.q_high > 1)
      fail(Errc::NonPositiveProb, "q_high outside [0,1]");
  }

  const std::size_t n = items.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto sort_key = [&](std::size_t i) {
    return items[i].q_high == 0 ? items[i].low : items[i].high;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sort_key(a) < sort_key(b); });

  std::vector<RawSupport2Item> sorted;
  sorted.reserve(n);
  for (std::size_t i : order) {
    RawSupport2Item raw = items[i];
    if (raw.q_high == 0) {  // point mass at the low value
      raw.high = raw.low;
      raw.q_high = 1;
    }
    sorted.push_back(raw);
  }

  const Support2Instance<EpsAffine> perturbed = perturb_instance(sorted);
  auto [eps_prices, eps_revenue] = solve_nondegenerate(perturbed);

  SolveResult out;
  out.revenue = eps_revenue.c0;
  out.prices.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) out.prices[order[pos]] = eps_prices[pos].c0;

  const PricingInstance reference = support2_instance(items);
  const Rational check = expected_revenue(reference, out.prices);
  if (check != out.revenue)
    fail(Errc::LimitMismatch, "limit revenue " + to_string(out.revenue) +
                                  " but the limit prices earn " + to_string(check));
  return out;
}

SolveResult solve_support2(const PricingInstance& inst) {
  std::vector<RawSupport2Item> items;
  items.reserve(inst.size());
  for (const auto& item : inst.items) {
    if (item.support_size() > 2)
      fail(Errc::SupportTooLarge, "an item has more than two support values");
    RawSupport2Item raw;
    if (item.support_size() == 1) {
      raw.low = raw.high = item.values[0];
      raw.q_high = 1;
    } else {
      raw.low = item.values[0];
      raw.high = item.values[1];
      raw.q_high = item.probs[1];
    }
    items.push_back(std::move(raw));
  }
  return solve_support2(std::move(items));
}

}  // namespace pricing
