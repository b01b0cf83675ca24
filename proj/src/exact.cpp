#include "pricing/exact.hpp"

#include <algorithm>
#include <utility>

#include "pricing/errors.hpp"
#include "pricing/revenue.hpp"

namespace pricing {

namespace {

// Integer evaluation kernel. With every value and price an integer and the
// probabilities of item i brought to a common denominator D_i, every win
// probability is an integer multiple of 1 / prod_i D_i, so one revenue
// evaluation is pure cpp_int arithmetic and price vectors compare by
// numerator alone. This keeps the oracle's inner loop free of per-operation
// gcd normalization.
struct IntItem {
  std::vector<Integer> values;
  std::vector<Integer> weights;  // probability numerators over denom
  Integer denom;
};

struct IntKernel {
  std::vector<IntItem> items;
  Integer common_denom;  // prod_i denom_i

  explicit IntKernel(const PricingInstance& inst) : common_denom(1) {
    items.resize(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
      IntItem& it = items[i];
      it.denom = 1;
      for (const auto& q : inst.items[i].probs)
        it.denom = boost::multiprecision::lcm(it.denom, denominator(q));
      for (std::size_t l = 0; l < inst.items[i].values.size(); ++l) {
        it.values.push_back(to_integer(inst.items[i].values[l]));
        it.weights.push_back(numerator(inst.items[i].probs[l]) *
                             (it.denom / denominator(inst.items[i].probs[l])));
      }
      common_denom *= it.denom;
    }
  }

  // Revenue numerator over common_denom at integer prices.
  Integer revenue_numerator(const std::vector<Integer>& prices) const {
    const std::size_t n = items.size();
    Integer total(0);
    for (std::size_t i = 0; i < n; ++i) {
      Integer gamma_num(0);
      for (std::size_t k = 0; k < items[i].values.size(); ++k) {
        const Integer& si = items[i].values[k];
        if (si < prices[i]) continue;
        Integer term = items[i].weights[k];
        for (std::size_t j = 0; j < n && term != 0; ++j) {
          if (j == i) continue;
          Integer lose(0);
          for (std::size_t l = 0; l < items[j].values.size(); ++l)
            if (revenue_loses(items[j].values[l], prices[j], j, si, prices[i], i))
              lose += items[j].weights[l];
          term *= lose;
        }
        gamma_num += term;
      }
      // gamma_num is over prod_{j != i} denom_j * denom_i = common_denom
      total += gamma_num * prices[i];
    }
    return total;
  }

  static bool revenue_loses(const Integer& vj, const Integer& pj, std::size_t j,
                            const Integer& si, const Integer& pi, std::size_t i) {
    const Integer uj = vj - pj;
    const Integer ui = si - pi;
    if (uj != ui) return uj < ui;
    if (pj != pi) return pj < pi;
    return j > i;
  }
};

std::uint64_t checked_product(const std::vector<std::size_t>& sizes, std::uint64_t budget,
                              Errc overflow_code, const char* what) {
  std::uint64_t count = 1;
  for (std::size_t s : sizes) {
    if (s == 0) fail(Errc::EmptyInstance, std::string(what) + ": empty candidate set");
    if (count > budget / s) fail(overflow_code, std::string(what) + " exceeds budget");
    count *= s;
  }
  return count;
}

SolveResult enumerate_integer(const PricingInstance& inst,
                              const std::vector<std::vector<Integer>>& cands,
                              std::uint64_t budget, Errc overflow_code, const char* what) {
  const std::size_t n = inst.size();
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = cands[i].size();
  const std::uint64_t count = checked_product(sizes, budget, overflow_code, what);

  IntKernel kernel(inst);
  std::vector<std::size_t> idx(n, 0);
  std::vector<Integer> prices(n);
  for (std::size_t i = 0; i < n; ++i) prices[i] = cands[i][0];

  Integer best_num(-1);
  std::vector<Integer> best_prices;
  for (std::uint64_t step = 0; step < count; ++step) {
    Integer num = kernel.revenue_numerator(prices);
    if (num > best_num) {
      best_num = num;
      best_prices = prices;
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < cands[i].size()) {
        prices[i] = cands[i][idx[i]];
        break;
      }
      idx[i] = 0;
      prices[i] = cands[i][0];
    }
  }

  SolveResult out;
  out.revenue = Rational(best_num, kernel.common_denom);
  out.prices.reserve(n);
  for (const auto& p : best_prices) out.prices.emplace_back(p);
  return out;
}

}  // namespace

SolveResult grid_solve(const PricingInstance& inst, std::uint64_t budget) {
  if (!has_integer_values(inst))
    fail(Errc::NonIntegerValues, "grid_solve needs integer support values; scale first");
  std::vector<std::vector<Integer>> cands(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Integer lo = to_integer(inst.items[i].min_value());
    const Integer hi = to_integer(inst.items[i].max_value());
    if (hi - lo >= Integer(budget)) fail(Errc::GridTooLarge, "grid exceeds budget");
    for (Integer p = lo; p <= hi; ++p) cands[i].push_back(p);
  }
  return enumerate_integer(inst, cands, budget, Errc::GridTooLarge, "grid");
}

SolveResult restricted_solve(const PricingInstance& inst,
                             const std::vector<std::vector<Rational>>& candidates,
                             std::uint64_t budget) {
  const std::size_t n = inst.size();
  if (candidates.size() != n)
    fail(Errc::DimensionMismatch, "candidate sets count != item count");

  std::vector<std::vector<Rational>> sorted = candidates;
  bool all_integer = has_integer_values(inst);
  for (auto& set : sorted) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (const auto& c : set)
      if (!is_integer(c)) all_integer = false;
  }

  if (all_integer) {
    std::vector<std::vector<Integer>> cands(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& c : sorted[i]) cands[i].push_back(to_integer(c));
    return enumerate_integer(inst, cands, budget, Errc::GridTooLarge, "candidate product");
  }

  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = sorted[i].size();
  const std::uint64_t count =
      checked_product(sizes, budget, Errc::GridTooLarge, "candidate product");

  std::vector<std::size_t> idx(n, 0);
  PriceVector prices(n);
  for (std::size_t i = 0; i < n; ++i) prices[i] = sorted[i][0];
  Rational best(-1);
  PriceVector best_prices;
  for (std::uint64_t step = 0; step < count; ++step) {
    Rational rev = expected_revenue(inst, prices);
    if (rev > best) {
      best = rev;
      best_prices = prices;
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < sorted[i].size()) {
        prices[i] = sorted[i][idx[i]];
        break;
      }
      idx[i] = 0;
      prices[i] = sorted[i][0];
    }
  }
  return {std::move(best_prices), std::move(best)};
}

}  // namespace pricing
