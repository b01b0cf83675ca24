#include "pricing/reductions.hpp"

#include <algorithm>
#include <utility>

#include "pricing/errors.hpp"

namespace pricing {

Support3Construction partition_to_support3(PartitionInstance source, const Integer& scale) {
  if (source.weights.empty()) fail(Errc::EmptyInstance, "no weights");
  if (scale < 1) fail(Errc::InvalidProbabilities, "scale must be positive");
  for (const auto& w : source.weights)
    if (w < 1) fail(Errc::InvalidProbabilities, "weights must be positive integers");

  Support3Construction cons;
  cons.weights = std::move(source.weights);
  cons.scale = scale;
  const std::size_t n = cons.weights.size();

  // convention: the maximal weight leads, remaining order preserved
  auto max_it = std::max_element(cons.weights.begin(), cons.weights.end());
  std::rotate(cons.weights.begin(), max_it, max_it + 1);

  Integer total(0);
  for (const auto& w : cons.weights) total += w;
  if (total % 2 != 0) fail(Errc::OddSum, "weight total is odd, no equal split exists");
  cons.half_sum = Rational(total / 2);

  cons.mass_denom = scale * int_pow(Integer(2), static_cast<unsigned>(n)) *
                    cons.weights[0] * cons.weights[0] * cons.weights[0];
  cons.error_scale = cons.mass_denom / cons.weights[0];

  const Rational a(Support3Construction::kLowPrice);
  const Rational b(Support3Construction::kHighPrice);

  Rational mass_sum(0);
  cons.high_prob.reserve(n);
  for (const auto& w : cons.weights) {
    cons.high_prob.emplace_back(w, cons.mass_denom);
    mass_sum += cons.high_prob.back();
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational peers = mass_sum - cons.high_prob[i];
    const Rational peer = (b / (2 * a)) * peers;
    cons.peer_mass.push_back(peer);
    if (peer >= 1)
      fail(Errc::InvalidProbabilities, "peer mass >= 1 at this scale; raise the scale");
    const Rational mid = ((b - a) / (a * (1 - peer))) * cons.high_prob[i];
    cons.mid_prob.push_back(mid);
    if (cons.high_prob[i] + mid >= 1)
      fail(Errc::InvalidProbabilities,
           "item " + std::to_string(i + 1) + " has high+mid mass >= 1; raise the scale");
  }

  cons.first_order = b * mass_sum;
  cons.second_order = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      cons.second_order -= b * cons.high_prob[i] * cons.high_prob[j];
  cons.revenue_base = cons.first_order + cons.second_order;
  const Rational m2 = Rational(cons.mass_denom * cons.mass_denom);
  cons.threshold = cons.revenue_base + (cons.half_sum * cons.half_sum - Rational(1, 2)) / m2;

  for (std::size_t i = 0; i < n; ++i) {
    ValueDistribution d;
    d.values = {Rational(0), a, b};
    d.probs = {1 - cons.high_prob[i] - cons.mid_prob[i], cons.mid_prob[i], cons.high_prob[i]};
    cons.instance.items.push_back(std::move(d));
  }
  cons.instance = validate_instance(std::move(cons.instance));
  return cons;
}

Rational quadratic_approx_support3(const Support3Construction& cons,
                                   const std::vector<bool>& at_low) {
  if (at_low.size() != cons.weights.size())
    fail(Errc::DimensionMismatch, "subset mask length != item count");
  Integer low_sum(0), high_sum(0);
  for (std::size_t i = 0; i < at_low.size(); ++i)
    (at_low[i] ? low_sum : high_sum) += cons.weights[i];
  return cons.revenue_base +
         Rational(low_sum * high_sum, cons.mass_denom * cons.mass_denom);
}

PricingInstance shift_positive(const PricingInstance& inst) {
  PricingInstance out = inst;
  for (auto& item : out.items)
    for (auto& v : item.values) v += 1;
  ValueDistribution unit;
  unit.values = {Rational(1)};
  unit.probs = {Rational(1)};
  out.items.push_back(std::move(unit));
  return out;
}

KnapsackInstance subsetsum_to_knapsack(const std::vector<Integer>& values,
                                       const Integer& target) {
  if (values.empty()) fail(Errc::EmptyInstance, "no values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) fail(Errc::InvalidProbabilities, "values must be positive");
    if (i + 1 < values.size() && values[i] >= values[i + 1])
      fail(Errc::NonAscendingSupport, "values must be strictly ascending");
  }
  if (target <= values.back())
    fail(Errc::InvalidProbabilities, "target must exceed the largest value");

  const std::size_t n = values.size();
  const Integer pad = Integer(n) * Integer(n) * target;  // K

  KnapsackInstance out;
  Integer pad_pow(1);
  Integer pad_sum(0);
  for (std::size_t i = 0; i < n; ++i) {
    pad_pow *= pad;
    out.weights.push_back(pad_pow);
    out.weights.push_back(pad_pow + values[i]);
    pad_sum += pad_pow;
  }
  const Integer top = pad_pow * pad;  // K^{n+1}
  out.weights.push_back(top);
  std::sort(out.weights.begin(), out.weights.end());
  out.target = target + pad_sum + Integer(n + 1) * top;
  return out;
}

std::size_t IIDConstruction::section_of(std::size_t i, std::size_t j) const {
  // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in order
  const std::size_t before_i = i * n() - i * (i + 1) / 2;
  return before_i + (j - i - 1);
}

namespace {

void check_knapsack(const KnapsackInstance& k) {
  if (k.weights.size() < 2)
    fail(Errc::EmptyInstance, "need at least two weights for the IID construction");
  for (std::size_t i = 0; i < k.weights.size(); ++i) {
    if (k.weights[i] < 1) fail(Errc::InvalidProbabilities, "weights must be positive");
    if (i + 1 < k.weights.size() && k.weights[i] >= k.weights[i + 1])
      fail(Errc::NonAscendingSupport, "weights must be strictly ascending");
  }
  if (k.target < 1 || k.target > Integer(k.weights.size()) * k.weights.back())
    fail(Errc::InvalidProbabilities, "target outside (0, n * max weight]");
}

}  // namespace

void rebuild_iid_distribution(IIDConstruction& cons) {
  const std::size_t n = cons.n();
  const std::size_t seclen = cons.section_length();
  const Rational pair_count(cons.section_count());

  cons.offset_dists.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t start = cons.section_of(i, j) * seclen;  // positions start+1 .. start+seclen
      const Rational even(1, 2 * cons.section_count());
      for (std::size_t l = 0; l < n; ++l) {
        auto& dist = cons.offset_dists[l];
        if (l == i) {
          const Rational swing = pair_count * (cons.offset_win[i][j] - Rational(1, 2));
          const Rational lo = even - swing;
          const Rational hi = even + swing;
          if (lo < 0 || hi < 0)
            fail(Errc::SectionMassNegative,
                 "within-block win probability too far from 1/2 for these parameters");
          if (lo != 0) dist[start + n + 1] += lo;
          if (hi != 0) dist[start + n + 3] += hi;
        } else if (l == j) {
          dist[start + n + 2] += 2 * even;
        } else {
          dist[start + (l + 1)] += even;
          dist[start + (seclen - (l + 1) + 1)] += even;
        }
      }
    }
  }

  // Assemble the shared distribution: mass at each block base, the offset
  // masses above it, and the remainder at 0.
  ValueDistribution q;
  Rational placed(0);
  std::vector<std::pair<Rational, Rational>> points;  // (value, prob)
  for (std::size_t i = 0; i < n; ++i) {
    const Rational base_mass = cons.block_mass[i] / Rational(cons.base) + cons.mass_shift[i];
    if (base_mass < 0) fail(Errc::RemainderNegative, "block base mass negative");
    const Rational offset_total =
        cons.block_mass[i] * Rational(cons.base - 1) / Rational(cons.base);
    if (base_mass != 0) points.emplace_back(Rational(cons.block_values[i]), base_mass);
    for (const auto& [offset, mass] : cons.offset_dists[i]) {
      const Rational p = mass * offset_total;
      if (p != 0) points.emplace_back(Rational(cons.block_values[i] + Integer(offset)), p);
    }
    placed += cons.block_mass[i] + cons.mass_shift[i];
  }
  const Rational at_zero = 1 - placed;
  if (at_zero <= 0) fail(Errc::RemainderNegative, "no probability mass left for value 0");
  q.values.push_back(Rational(0));
  q.probs.push_back(at_zero);
  std::sort(points.begin(), points.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [value, prob] : points) {
    q.values.push_back(std::move(value));
    q.probs.push_back(std::move(prob));
  }
  cons.value_dist = std::move(q);
}

IIDConstruction knapsack_to_iid(const KnapsackInstance& source,
                                const std::optional<Integer>& error_scale_override) {
  check_knapsack(source);
  IIDConstruction cons;
  cons.weights = source.weights;
  cons.target = source.target;
  const std::size_t n = cons.n();

  cons.base = std::max(int_pow(Integer(n), 5), cons.weights.back());
  const Integer& m = cons.base;
  if (error_scale_override) {
    const Integer floor_scale =
        2 * int_pow(Integer(n), 3) * int_pow(m, static_cast<unsigned>(4 * n));
    if (*error_scale_override < floor_scale)
      fail(Errc::InvalidProbabilities,
           "error-scale override below the validity floor 2 n^3 m^(4n)");
    cons.error_scale = *error_scale_override;
  } else {
    cons.error_scale = int_pow(m, static_cast<unsigned>(n * n));
  }
  const Integer& N = cons.error_scale;

  for (std::size_t i = 1; i <= n; ++i)
    cons.block_values.push_back(int_pow(m, static_cast<unsigned>(n + i)));

  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n)
      cons.block_mass.emplace_back(m - 1, N * int_pow(m, static_cast<unsigned>(n + i + 1)));
    else
      cons.block_mass.emplace_back(1, N * int_pow(m, static_cast<unsigned>(2 * n)));
    cons.tail_mass.emplace_back(1, N * int_pow(m, static_cast<unsigned>(n + i)));
  }

  // Cumulative shifts solved per index: the defining equation is linear in
  // tail_shift[i] once tail_prob[i] = tail_mass[i] + tail_shift[i] is
  // substituted.
  const Rational m3n = Rational(int_pow(m, static_cast<unsigned>(3 * n)));
  const Rational n2m3n = Rational(N) * Rational(N) * m3n;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational vi(cons.block_values[i]);
    const Rational ai(cons.weights[i]);
    const Rational curvature =
        (Rational(n) * ai * ai - 2 * ai * Rational(cons.target)) / n2m3n;
    const Rational half_coeff = Rational(n - 1) / (2 * Rational(N));
    const Rational shift = (half_coeff * cons.tail_mass[i] - curvature) / (vi - half_coeff);
    cons.tail_shift.push_back(shift);
    cons.tail_prob.push_back(cons.tail_mass[i] + shift);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational next = (i + 1 < n) ? cons.tail_shift[i + 1] : Rational(0);
    cons.mass_shift.push_back(cons.tail_shift[i] - next);
  }

  cons.pair_win.assign(n, std::vector<Rational>(n, Rational(0)));
  cons.offset_win.assign(n, std::vector<Rational>(n, Rational(0)));
  const Rational frac(m - 1, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational diff(cons.weights[i] - cons.weights[j]);
      const Rational target_p =
          Rational(1, 2) - (diff * diff) / (Rational(N) * m3n * (cons.tail_mass[i] - cons.tail_mass[j]));
      if (target_p < 0 || target_p > 1)
        fail(Errc::PairProbOutOfRange, "pairwise win target outside [0,1]");
      cons.pair_win[i][j] = target_p;

      // Peel off the contributions decided by block order alone; what
      // remains is the within-block comparison scaled by the offset masses.
      Rational higher_blocks(0);  // both strictly above block j, alpha's block not below beta's
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = j + 1; l <= k; ++l)
          higher_blocks += (cons.block_mass[k] + cons.mass_shift[k]) *
                           (cons.block_mass[l] + cons.mass_shift[l]);
      Rational beta_at_base(0);  // beta in block j, alpha strictly above block i
      for (std::size_t k = i + 1; k < n; ++k)
        beta_at_base += (cons.block_mass[k] + cons.mass_shift[k]) *
                        (cons.block_mass[j] + cons.mass_shift[j]);
      const Rational alpha_offset = frac * cons.block_mass[i];
      const Rational beta_offset = frac * cons.block_mass[j];
      const Rational same_block_fixed =
          (cons.block_mass[j] / Rational(m) + cons.mass_shift[j]) * alpha_offset;
      const Rational coeff = alpha_offset * beta_offset;
      if (coeff == 0) fail(Errc::PairProbOutOfRange, "offset mass vanished");
      const Rational q = (target_p * cons.tail_prob[i] * cons.tail_prob[j] - higher_blocks -
                          beta_at_base - same_block_fixed) /
                         coeff;
      if (q < 0 || q > 1)
        fail(Errc::PairProbOutOfRange, "within-block win probability outside [0,1]");
      cons.offset_win[i][j] = q;
    }
  }

  rebuild_iid_distribution(cons);

  cons.threshold = Rational(n) / Rational(N) +
                   (Rational(cons.target) * Rational(cons.target) - Rational(1, 2)) / n2m3n;
  return cons;
}

PricingInstance iid_instance(const IIDConstruction& cons) {
  PricingInstance inst;
  inst.items.assign(cons.n(), cons.value_dist);
  return validate_instance(std::move(inst));
}

Rational iid_approx_revenue(const IIDConstruction& cons,
                            const std::vector<Integer>& multiplicities) {
  const std::size_t n = cons.n();
  if (multiplicities.size() != n)
    fail(Errc::MultiplicityMismatch, "multiplicity vector length != n");
  Integer total(0), picked(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (multiplicities[i] < 0) fail(Errc::MultiplicityMismatch, "negative multiplicity");
    total += multiplicities[i];
    picked += multiplicities[i] * cons.weights[i];
  }
  if (total != Integer(n)) fail(Errc::MultiplicityMismatch, "multiplicities must sum to n");

  const Rational n2m3n = Rational(cons.error_scale) * Rational(cons.error_scale) *
                         Rational(int_pow(cons.base, static_cast<unsigned>(3 * n)));
  const Rational miss(picked - cons.target);
  return Rational(n) / Rational(cons.error_scale) +
         (Rational(cons.target) * Rational(cons.target) - miss * miss) / n2m3n;
}

IIDVerification verify_iid_construction(const IIDConstruction& cons) {
  IIDVerification report;
  const std::size_t n = cons.n();
  const Integer& N = cons.error_scale;

  Rational sum(0);
  for (const auto& p : cons.value_dist.probs) sum += p;
  report.distribution_sums_to_one = (sum == 1);
  if (!report.distribution_sums_to_one)
    report.failures.push_back("distribution mass totals " + to_string(sum));

  report.block_value_tail_identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (Rational(cons.block_values[i]) * cons.tail_mass[i] != Rational(1, N)) {
      report.block_value_tail_identity = false;
      report.failures.push_back("block value * tail mass != 1/N at block " + std::to_string(i + 1));
    }
  }

  const Rational n2m3n =
      Rational(N) * Rational(N) * Rational(int_pow(cons.base, static_cast<unsigned>(3 * n)));
  report.shift_equation_holds = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational ai(cons.weights[i]);
    const Rational rhs = (Rational(n - 1) * cons.tail_prob[i]) / (2 * Rational(N)) -
                         (Rational(n) * ai * ai - 2 * ai * Rational(cons.target)) / n2m3n;
    if (Rational(cons.block_values[i]) * cons.tail_shift[i] != rhs) {
      report.shift_equation_holds = false;
      report.failures.push_back("shift equation residual nonzero at block " + std::to_string(i + 1));
    }
  }

  // Brute-force both probability families straight from the distributions.
  report.pair_win_realized = true;
  report.offset_win_realized = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational vi(cons.block_values[i]);
      const Rational vj(cons.block_values[j]);
      Rational mass_i(0), mass_j(0), wins(0);
      for (std::size_t x = 0; x < cons.value_dist.values.size(); ++x) {
        if (cons.value_dist.values[x] < vi) continue;
        mass_i += cons.value_dist.probs[x];
        for (std::size_t y = 0; y < cons.value_dist.values.size(); ++y) {
          if (cons.value_dist.values[y] < vj) continue;
          if (cons.value_dist.values[x] - vi > cons.value_dist.values[y] - vj)
            wins += cons.value_dist.probs[x] * cons.value_dist.probs[y];
        }
      }
      for (std::size_t y = 0; y < cons.value_dist.values.size(); ++y)
        if (cons.value_dist.values[y] >= vj) mass_j += cons.value_dist.probs[y];
      if (wins != cons.pair_win[i][j] * mass_i * mass_j) {
        report.pair_win_realized = false;
        report.failures.push_back("pairwise win probability off target for blocks (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }

      Rational offset_wins(0);
      for (const auto& [x, px] : cons.offset_dists[i])
        for (const auto& [y, py] : cons.offset_dists[j])
          if (x > y) offset_wins += px * py;
      if (offset_wins != cons.offset_win[i][j]) {
        report.offset_win_realized = false;
        report.failures.push_back("offset win probability off target for blocks (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  return report;
}

}  // namespace pricing
