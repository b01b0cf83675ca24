#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pricing/model.hpp"

namespace pricing {

// ---------------------------------------------------------------------------
// Equal-sum partition -> support-3 pricing instances.
// ---------------------------------------------------------------------------

struct PartitionInstance {
  std::vector<Integer> weights;  // positive integers
};

// Pricing instance whose optimal revenue decides an equal-sum partition:
// every item takes values {0, 1, 3}; the probabilities are tuned so the
// revenue of a price vector in {1,3}^n is, up to a third-order error, a
// quadratic whose maximum hits the threshold exactly when the weights split
// evenly.
struct Support3Construction {
  std::vector<Integer> weights;      // reordered so weights[0] is maximal
  Integer scale;
  Integer mass_denom;                // M: high_prob[i] = weights[i] / M
  Integer error_scale;               // N = M / weights[0]
  std::vector<Rational> high_prob;   // Pr[value = 3]
  std::vector<Rational> mid_prob;    // Pr[value = 1]
  std::vector<Rational> peer_mass;   // (3/2) * sum of the other items' high_prob
  Rational half_sum;                 // half the weight total
  Rational first_order;              // constant first-order revenue term
  Rational second_order;             // constant second-order revenue term
  Rational revenue_base;             // first_order + second_order
  Rational threshold;                // decision threshold for "has a partition"
  PricingInstance instance;

  static constexpr int kLowPrice = 1;
  static constexpr int kHighPrice = 3;
};

// The common denominator M is scale * 2^n * max_weight^3; larger scales
// shrink the approximation error faster than the decision gap, so any
// instance becomes decidable at some scale. Throws OddSum for odd totals and
// InvalidProbabilities when the masses at a scale do not fit below 1.
Support3Construction partition_to_support3(PartitionInstance source, const Integer& scale = 1);

// The closed-form revenue surrogate for the price vector with item i at the
// low price iff at_low[i]: revenue_base + (sum of low weights) * (sum of high
// weights) / M^2.
Rational quadratic_approx_support3(const Support3Construction& cons,
                                   const std::vector<bool>& at_low);

// Shifts every support value up by 1 and appends one item of value 1 with
// probability 1; the optimal revenue rises by exactly 1.
PricingInstance shift_positive(const PricingInstance& inst);

// ---------------------------------------------------------------------------
// Subset-sum -> integer knapsack with repetitions -> IID pricing instances.
// ---------------------------------------------------------------------------

// "Pick exactly as many integers as there are weights, with repetition, so
// they sum to target."
struct KnapsackInstance {
  std::vector<Integer> weights;  // strictly ascending positive integers
  Integer target;
};

// Subset-sum (does a subset of `values` sum to `target`?) embeds into the
// knapsack form using one padding power per value: K = n^2 * target,
// integers {K^i, K^i + values[i], K^{n+1}}. Requires target > max(values).
KnapsackInstance subsetsum_to_knapsack(const std::vector<Integer>& values, const Integer& target);

// IID pricing instance deciding a knapsack instance. All n items share one
// distribution whose support splits into geometric blocks; the block a price
// lands in encodes which weight the item picks, and the within-block offset
// distributions realize prescribed pairwise win probabilities exactly.
struct IIDConstruction {
  std::vector<Integer> weights;  // a_i of the source instance
  Integer target;                // L of the source instance
  Integer base;                  // m = max(n^5, max weight) by default
  Integer error_scale;           // N; default base^(n^2), overridable

  std::vector<Integer> block_values;  // candidate prices, base^(n+1) .. base^(2n)
  std::vector<Rational> block_mass;   // probability mass of block i (before shift)
  std::vector<Rational> tail_mass;    // sum of block_mass from i on
  std::vector<Rational> tail_shift;   // cumulative correction, solved per index
  std::vector<Rational> mass_shift;   // per-block correction, successive differences
  std::vector<Rational> tail_prob;    // exact Pr[value >= block_values[i]]

  // For i < j: target probability that an item in block i outbids one in
  // block j after subtracting the block bases, and the within-block win
  // probability that realizes it. Entries with i >= j are unused.
  std::vector<std::vector<Rational>> pair_win;
  std::vector<std::vector<Rational>> offset_win;

  // offset_dists[l] maps an offset in [1, 2n^3] to its probability under the
  // l-th within-block distribution.
  std::vector<std::map<std::size_t, Rational>> offset_dists;

  ValueDistribution value_dist;  // the shared distribution Q
  Rational threshold;            // decision threshold for "knapsack solvable"

  std::size_t n() const { return weights.size(); }
  std::size_t section_length() const { return 2 * n() + 3; }
  std::size_t section_count() const { return n() * (n() - 1) / 2; }
  // Sections are labeled by pairs (i,j), i < j, in lexicographic order.
  std::size_t section_of(std::size_t i, std::size_t j) const;
};

// Builds the full construction. The override must be at least
// 2 n^3 base^{4n} (the scale below which the error analysis has no room);
// without an override the default base^(n^2) is used. Throws
// SectionMassNegative / PairProbOutOfRange / RemainderNegative when the
// chosen scale leaves no valid probabilities.
IIDConstruction knapsack_to_iid(const KnapsackInstance& source,
                                const std::optional<Integer>& error_scale_override = {});

// The instance itself: n items, each drawing from value_dist independently.
PricingInstance iid_instance(const IIDConstruction& cons);

// Second-order surrogate of the revenue of a price vector using
// multiplicities[i] copies of block_values[i]. Requires the multiplicities
// to be nonnegative and sum to n.
Rational iid_approx_revenue(const IIDConstruction& cons,
                            const std::vector<Integer>& multiplicities);

// Recomputes offset_dists and value_dist from the stored offset_win and
// shifts (used by fault-injection tests that perturb offset_win).
void rebuild_iid_distribution(IIDConstruction& cons);

struct IIDVerification {
  bool distribution_sums_to_one = false;
  bool block_value_tail_identity = false;  // block_values[i] * tail_mass[i] = 1/N
  bool shift_equation_holds = false;       // the per-index linear equation for tail_shift
  bool pair_win_realized = false;          // brute-forced conditional win prob == pair_win
  bool offset_win_realized = false;        // brute-forced offset win prob == offset_win
  std::vector<std::string> failures;

  bool all_pass() const {
    return distribution_sums_to_one && block_value_tail_identity && shift_equation_holds &&
           pair_win_realized && offset_win_realized;
  }
};

// Exact re-derivation of every construction identity by independent brute
// force over the distribution; failures are reported, never thrown.
IIDVerification verify_iid_construction(const IIDConstruction& cons);

}  // namespace pricing
