#pragma once

#include <optional>
#include <vector>

#include "pricing/eps_affine.hpp"
#include "pricing/model.hpp"
#include "pricing/revenue.hpp"

namespace pricing {

// Relation of a linear functional to a bound. cell_of emits only the exact
// signs LT / EQ / GT; hand-written cell descriptions (certificates) may also
// use the weak forms LE / GE.
enum class Rel { LT, LE, EQ, GE, GT };

const char* rel_name(Rel r);

// p_item REL bound, items 0-indexed.
struct PriceConstraint {
  std::size_t item;
  Rel rel;
  Rational bound;
};

// p_lhs - p_rhs REL bound.
struct DiffConstraint {
  std::size_t lhs;
  std::size_t rhs;
  Rel rel;
  Rational bound;
};

// A cell of the price-space partition: one constraint per hyperplane
// p_i = s (s in V_i) and p_i - p_j = s - t (s in V_i, t in V_j, i < j) when
// produced by cell_of. Arbitrary constraint lists are also accepted; whether
// they are consistent is decided by check_feasible, never assumed.
struct CellDescription {
  std::size_t n = 0;
  std::vector<PriceConstraint> price_rels;
  std::vector<DiffConstraint> diff_rels;
};

// Difference-constraint digraph over nodes 0..n, node 0 anchoring price 0.
// Edge (u,v) with weight w encodes p_v - p_u <= w; strict edges carry
// EpsAffine(w, -1), i.e. p_v - p_u <= w - eps. At most the tightest edge per
// ordered node pair is kept (minimum weight in the EpsAffine order).
struct GraphEdge {
  std::size_t from;
  std::size_t to;
  EpsAffine weight;
  bool strict;
};

struct ConstraintGraph {
  std::size_t nodes = 0;  // n + 1
  std::vector<GraphEdge> edges;
};

struct CellOptimum {
  PriceVector prices;
  Rational revenue;
  WinProbabilities gamma;
};

// Exact signs of every partition hyperplane at p.
CellDescription cell_of(const PricingInstance& inst, const PriceVector& prices);

ConstraintGraph build_constraint_graph(const PricingInstance& inst, const CellDescription& cell);

// True iff the graph has no cycle of negative EpsAffine weight. A rational
// zero-weight cycle through a strict edge totals (0, -k) < (0, 0), so a
// single Bellman-Ford pass covers both of the infeasibility conditions.
bool check_feasible(const ConstraintGraph& graph);

// Per-cell supremum: shortest-path distances from node 0 give the
// coordinatewise-largest point of the cell closure, which maximizes the
// revenue over the cell. nullopt when infeasible. Nodes unconstrained from
// above get price max V_i + 1; such an item never sells anywhere in the cell.
std::optional<CellOptimum> cell_optimum(const PricingInstance& inst, const CellDescription& cell);

// The NP certificate check: cell feasible and its optimum revenue >= threshold.
bool verify_certificate(const PricingInstance& inst, const CellDescription& cell,
                        const Rational& threshold);

// Whether prices satisfy every constraint of the cell, strict inequalities
// included (test helper; exposed for the invariant suite).
bool satisfies_cell(const CellDescription& cell, const std::vector<EpsAffine>& prices);

}  // namespace pricing
