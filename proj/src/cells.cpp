#include "pricing/cells.hpp"

#include <map>
#include <utility>

#include "pricing/errors.hpp"

namespace pricing {

namespace {

Rel sign_of(const Rational& lhs, const Rational& rhs) {
  if (lhs < rhs) return Rel::LT;
  if (lhs > rhs) return Rel::GT;
  return Rel::EQ;
}

struct EdgeAccumulator {
  std::map<std::pair<std::size_t, std::size_t>, EpsAffine> tightest;

  // p_to - p_from <= w, minus eps when strict.
  void add(std::size_t from, std::size_t to, const Rational& w, bool strict) {
    EpsAffine weight(w, strict ? Rational(-1) : Rational(0));
    auto [it, inserted] = tightest.try_emplace({from, to}, weight);
    if (!inserted && weight < it->second) it->second = weight;
  }

  // One constraint "lhs_expr REL bound" where lhs_expr = p_hi - p_lo
  // (lo = 0 encodes a plain price constraint).
  void add_relation(std::size_t lo, std::size_t hi, Rel rel, const Rational& bound) {
    switch (rel) {
      case Rel::LT: add(lo, hi, bound, true); break;
      case Rel::LE: add(lo, hi, bound, false); break;
      case Rel::EQ:
        add(lo, hi, bound, false);
        add(hi, lo, -bound, false);
        break;
      case Rel::GE: add(hi, lo, -bound, false); break;
      case Rel::GT: add(hi, lo, -bound, true); break;
    }
  }
};

}  // namespace

const char* rel_name(Rel r) {
  switch (r) {
    case Rel::LT: return "<";
    case Rel::LE: return "<=";
    case Rel::EQ: return "=";
    case Rel::GE: return ">=";
    case Rel::GT: return ">";
  }
  return "?";
}

CellDescription cell_of(const PricingInstance& inst, const PriceVector& prices) {
  const std::size_t n = inst.size();
  if (prices.size() != n) fail(Errc::DimensionMismatch, "price vector length != item count");
  CellDescription cell;
  cell.n = n;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& s : inst.items[i].values)
      cell.price_rels.push_back({i, sign_of(prices[i], s), s});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& s : inst.items[i].values)
        for (const auto& t : inst.items[j].values) {
          const Rational bound = s - t;
          cell.diff_rels.push_back({i, j, sign_of(prices[i] - prices[j], bound), bound});
        }
  return cell;
}

ConstraintGraph build_constraint_graph(const PricingInstance& inst, const CellDescription& cell) {
  if (cell.n != inst.size()) fail(Errc::DimensionMismatch, "cell dimension != item count");
  EdgeAccumulator acc;
  for (const auto& c : cell.price_rels) {
    if (c.item >= cell.n) fail(Errc::DimensionMismatch, "constraint item out of range");
    acc.add_relation(0, c.item + 1, c.rel, c.bound);
  }
  for (const auto& c : cell.diff_rels) {
    if (c.lhs >= cell.n || c.rhs >= cell.n || c.lhs == c.rhs)
      fail(Errc::DimensionMismatch, "constraint item pair out of range");
    acc.add_relation(c.rhs + 1, c.lhs + 1, c.rel, c.bound);
  }
  ConstraintGraph g;
  g.nodes = cell.n + 1;
  for (const auto& [key, weight] : acc.tightest)
    g.edges.push_back({key.first, key.second, weight, weight.c1 < 0});
  return g;
}

bool check_feasible(const ConstraintGraph& graph) {
  // Virtual-source Bellman-Ford: all-zero start reaches every negative cycle.
  std::vector<EpsAffine> dist(graph.nodes, EpsAffine(Rational(0)));
  for (std::size_t round = 0; round + 1 < graph.nodes; ++round) {
    bool changed = false;
    for (const auto& e : graph.edges) {
      EpsAffine relaxed = dist[e.from] + e.weight;
      if (relaxed < dist[e.to]) {
        dist[e.to] = std::move(relaxed);
        changed = true;
      }
    }
    if (!changed) return true;
  }
  for (const auto& e : graph.edges)
    if (dist[e.from] + e.weight < dist[e.to]) return false;
  return true;
}

std::optional<CellOptimum> cell_optimum(const PricingInstance& inst, const CellDescription& cell) {
  ConstraintGraph graph = build_constraint_graph(inst, cell);
  if (!check_feasible(graph)) return std::nullopt;

  // Shortest-path distances from node 0; unreachable nodes stay unset.
  std::vector<std::optional<EpsAffine>> dist(graph.nodes);
  dist[0] = EpsAffine(Rational(0));
  for (std::size_t round = 0; round + 1 < graph.nodes; ++round) {
    bool changed = false;
    for (const auto& e : graph.edges) {
      if (!dist[e.from]) continue;
      EpsAffine relaxed = *dist[e.from] + e.weight;
      if (!dist[e.to] || relaxed < *dist[e.to]) {
        dist[e.to] = std::move(relaxed);
        changed = true;
      }
    }
    if (!changed) break;
  }

  CellOptimum out;
  out.prices.resize(cell.n);
  for (std::size_t i = 0; i < cell.n; ++i) {
    if (dist[i + 1]) {
      out.prices[i] = dist[i + 1]->c0;
    } else {
      // No upper-bound chain from node 0: the cell keeps p_i above the whole
      // support, so the item never sells and any price beyond max V_i is
      // revenue-equivalent.
      out.prices[i] = inst.items[i].max_value() + 1;
    }
  }
  out.revenue = expected_revenue(inst, out.prices);
  out.gamma = win_probabilities(inst, out.prices);
  return out;
}

bool verify_certificate(const PricingInstance& inst, const CellDescription& cell,
                        const Rational& threshold) {
  auto opt = cell_optimum(inst, cell);
  return opt && opt->revenue >= threshold;
}

bool satisfies_cell(const CellDescription& cell, const std::vector<EpsAffine>& prices) {
  auto holds = [](const EpsAffine& lhs, Rel rel, const EpsAffine& rhs) {
    switch (rel) {
      case Rel::LT: return lhs < rhs;
      case Rel::LE: return lhs <= rhs;
      case Rel::EQ: return lhs == rhs;
      case Rel::GE: return lhs >= rhs;
      case Rel::GT: return lhs > rhs;
    }
    return false;
  };
  for (const auto& c : cell.price_rels)
    if (!holds(prices[c.item], c.rel, EpsAffine(c.bound))) return false;
  for (const auto& c : cell.diff_rels)
    if (!holds(prices[c.lhs] - prices[c.rhs], c.rel, EpsAffine(c.bound))) return false;
  return true;
}

}  // namespace pricing
