#include "pricing/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pricing/cells.hpp"
#include "pricing/errors.hpp"
#include "pricing/exact.hpp"
#include "pricing/io.hpp"
#include "pricing/reductions.hpp"
#include "pricing/revenue.hpp"
#include "pricing/support2.hpp"

namespace pricing {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::UsageError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::UsageError, "cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& r : parse_rational_list(text)) {
    if (!is_integer(r)) fail(Errc::UsageError, "expected integers, got " + to_string(r));
    out.push_back(to_integer(r));
  }
  return out;
}

// Plain decimal or "B^E".
Integer parse_big_integer(const std::string& text) {
  const auto caret = text.find('^');
  if (caret == std::string::npos) {
    const Rational r = parse_rational(text);
    if (!is_integer(r)) fail(Errc::UsageError, "expected an integer, got " + text);
    return to_integer(r);
  }
  const Integer base = parse_big_integer(text.substr(0, caret));
  const Rational exp = parse_rational(text.substr(caret + 1));
  if (!is_integer(exp) || exp < 0 || exp > 1000000)
    fail(Errc::UsageError, "bad exponent in " + text);
  return int_pow(base, static_cast<unsigned>(to_integer(exp)));
}

TieBreakRule parse_rule(const std::string& text) {
  if (text == "max-price") return TieBreakRule::MaxPriceThenMinIndex;
  if (text == "min-index") return TieBreakRule::MinIndex;
  if (text == "max-index") return TieBreakRule::MaxIndex;
  fail(Errc::UsageError, "unknown rule '" + text + "'");
}

json prices_json(const PriceVector& prices) {
  json arr = json::array();
  for (const auto& p : prices) arr.push_back(to_string(p));
  return arr;
}

// Every emitted result re-validates its own revenue claim first.
json result_report(const PricingInstance& inst, const SolveResult& result,
                   const std::string& solver, double elapsed_ms) {
  if (expected_revenue(inst, result.prices) != result.revenue)
    fail(Errc::Internal, "result report failed revenue revalidation");
  json doc;
  doc["solver"] = solver;
  doc["prices"] = prices_json(result.prices);
  doc["revenue"] = to_string(result.revenue);
  doc["instance_digest"] = instance_digest(inst);
  doc["timing_ms"] = elapsed_ms;
  return doc;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct Options {
  std::string in_path, out_path, cell_path;
  std::string prices, rule = "max-price", candidates, weights, values, subset;
  std::string threshold, scale = "1", n_override, big_target;
  std::uint64_t budget = 10000000;
};

// Auto dispatch: support-2 instances go to the polynomial solver, integer
// instances to the grid oracle, anything else is scaled to integers first.
std::pair<SolveResult, std::string> solve_auto(const PricingInstance& inst,
                                               std::uint64_t budget) {
  bool support2 = true;
  for (const auto& item : inst.items)
    if (item.support_size() > 2) support2 = false;
  if (support2) return {solve_support2(inst), "support2"};
  if (has_integer_values(inst)) return {grid_solve(inst, budget), "grid"};
  auto [scaled, factor] = scale_to_integer(inst);
  SolveResult result = grid_solve(scaled, budget);
  for (auto& p : result.prices) p /= factor;
  result.revenue /= factor;
  return {result, "scaled-grid"};
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
  if (command == "validate") {
    const PricingInstance inst = parse_instance(read_file(opt.in_path));
    json doc;
    doc["valid"] = true;
    doc["items"] = inst.size();
    doc["instance_digest"] = instance_digest(inst);
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (command == "eval") {
    const PricingInstance inst = parse_instance(read_file(opt.in_path));
    const PriceVector prices = parse_rational_list(opt.prices);
    const TieBreakRule rule = parse_rule(opt.rule);
    Timer timer;
    const Rational revenue = rule == TieBreakRule::MaxPriceThenMinIndex
                                 ? expected_revenue(inst, prices)
                                 : expected_revenue_naive(inst, prices, rule, opt.budget);
    json doc;
    doc["revenue"] = to_string(revenue);
    doc["rule"] = opt.rule;
    if (rule == TieBreakRule::MaxPriceThenMinIndex) {
      const WinProbabilities gamma = win_probabilities(inst, prices);
      json arr = json::array();
      for (const auto& g : gamma.gamma) arr.push_back(to_string(g));
      doc["win_probabilities"] = std::move(arr);
    }
    doc["instance_digest"] = instance_digest(inst);
    doc["timing_ms"] = timer.ms();
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (command == "solve" || command == "solve-support2" || command == "grid-solve") {
    const PricingInstance inst = parse_instance(read_file(opt.in_path));
    Timer timer;
    SolveResult result;
    std::string solver;
    if (command == "solve-support2") {
      result = solve_support2(inst);
      solver = "support2";
    } else if (command == "grid-solve") {
      result = grid_solve(inst, opt.budget);
      solver = "grid";
    } else {
      std::tie(result, solver) = solve_auto(inst, opt.budget);
    }
    const json doc = result_report(inst, result, solver, timer.ms());
    out << doc.dump(2) << "\n";
    if (!opt.out_path.empty()) write_file(opt.out_path, doc.dump(2) + "\n");
    if (!opt.threshold.empty() && result.revenue < parse_rational(opt.threshold)) return 1;
    return 0;
  }

  if (command == "restricted-solve") {
    const PricingInstance inst = parse_instance(read_file(opt.in_path));
    std::vector<std::vector<Rational>> cands;
    for (const auto& part : split(opt.candidates, ';')) cands.push_back(parse_rational_list(part));
    Timer timer;
    const SolveResult result = restricted_solve(inst, cands, opt.budget);
    const json doc = result_report(inst, result, "restricted", timer.ms());
    out << doc.dump(2) << "\n";
    if (!opt.threshold.empty() && result.revenue < parse_rational(opt.threshold)) return 1;
    return 0;
  }

  if (command == "verify-cell") {
    const PricingInstance inst = parse_instance(read_file(opt.in_path));
    const CellDescription cell = parse_cell(read_file(opt.cell_path), inst.size());
    if (opt.threshold.empty()) fail(Errc::UsageError, "verify-cell needs --threshold");
    const Rational threshold = parse_rational(opt.threshold);
    const auto optimum = cell_optimum(inst, cell);
    json doc;
    doc["feasible"] = optimum.has_value();
    if (optimum) {
      doc["prices"] = prices_json(optimum->prices);
      doc["revenue"] = to_string(optimum->revenue);
    }
    doc["threshold"] = to_string(threshold);
    const bool ok = verify_certificate(inst, cell, threshold);
    doc["certified"] = ok;
    out << doc.dump(2) << "\n";
    return ok ? 0 : 1;
  }

  if (command == "gen-partition" || command == "approx-quadratic") {
    const PartitionInstance source{parse_integer_list(opt.weights)};
    const Support3Construction cons =
        partition_to_support3(source, parse_big_integer(opt.scale));
    json doc;
    doc["weights"] = json::array();
    for (const auto& w : cons.weights) doc["weights"].push_back(w.str());
    doc["mass_denom"] = cons.mass_denom.str();
    doc["revenue_base"] = to_string(cons.revenue_base);
    doc["threshold"] = to_string(cons.threshold);
    if (command == "approx-quadratic") {
      std::vector<bool> at_low(cons.weights.size(), false);
      if (!opt.subset.empty())
        for (const auto& idx : parse_integer_list(opt.subset)) {
          if (idx < 1 || idx > Integer(cons.weights.size()))
            fail(Errc::UsageError, "subset index out of range");
          at_low[static_cast<std::size_t>(idx - 1)] = true;
        }
      doc["approx_revenue"] = to_string(quadratic_approx_support3(cons, at_low));
    } else {
      doc["instance_digest"] = instance_digest(cons.instance);
      if (!opt.out_path.empty()) write_file(opt.out_path, serialize_instance(cons.instance));
    }
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (command == "gen-subsetsum-knapsack") {
    const KnapsackInstance k =
        subsetsum_to_knapsack(parse_integer_list(opt.values), parse_big_integer(opt.big_target));
    json doc;
    doc["weights"] = json::array();
    for (const auto& w : k.weights) doc["weights"].push_back(w.str());
    doc["target"] = k.target.str();
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (command == "gen-iid" || command == "verify-iid") {
    KnapsackInstance k;
    k.weights = parse_integer_list(opt.weights);
    k.target = parse_big_integer(opt.big_target);
    std::optional<Integer> override_scale;
    if (!opt.n_override.empty()) override_scale = parse_big_integer(opt.n_override);
    const IIDConstruction cons = knapsack_to_iid(k, override_scale);
    json doc;
    doc["base"] = cons.base.str();
    doc["error_scale"] = cons.error_scale.str();
    doc["block_values"] = json::array();
    for (const auto& v : cons.block_values) doc["block_values"].push_back(v.str());
    doc["threshold"] = to_string(cons.threshold);
    doc["support_size"] = cons.value_dist.values.size();
    if (command == "gen-iid") {
      const PricingInstance inst = iid_instance(cons);
      doc["instance_digest"] = instance_digest(inst);
      if (!opt.out_path.empty()) write_file(opt.out_path, serialize_instance(inst));
      out << doc.dump(2) << "\n";
      return 0;
    }
    const IIDVerification report = verify_iid_construction(cons);
    doc["distribution_sums_to_one"] = report.distribution_sums_to_one;
    doc["block_value_tail_identity"] = report.block_value_tail_identity;
    doc["shift_equation_holds"] = report.shift_equation_holds;
    doc["pair_win_realized"] = report.pair_win_realized;
    doc["offset_win_realized"] = report.offset_win_realized;
    doc["failures"] = report.failures;
    out << doc.dump(2) << "\n";
    return report.all_pass() ? 0 : 1;
  }

  fail(Errc::UsageError, "unknown command '" + command + "'");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for unit-demand item pricing"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::string> commands = {
      "validate",      "eval",
      "solve",         "solve-support2",
      "grid-solve",    "restricted-solve",
      "verify-cell",   "gen-partition",
      "gen-subsetsum-knapsack", "gen-iid",
      "verify-iid",    "approx-quadratic"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--in", opt.in_path, "instance file");
    sub->add_option("--out", opt.out_path, "output file");
    sub->add_option("--prices", opt.prices, "comma-separated rational prices");
    sub->add_option("--rule", opt.rule, "max-price|min-index|max-index");
    sub->add_option("--budget", opt.budget, "enumeration budget");
    sub->add_option("--scale", opt.scale, "partition construction scale");
    sub->add_option("--n-override", opt.n_override, "error-scale override (decimal or B^E)");
    sub->add_option("--threshold", opt.threshold, "decision threshold");
    sub->add_option("--cell", opt.cell_path, "cell constraints file");
    sub->add_option("--candidates", opt.candidates, "per-item price lists, ';'-separated");
    sub->add_option("--c", opt.weights, "partition weights / knapsack weights");
    sub->add_option("--a", opt.weights, "knapsack weights");
    sub->add_option("--b", opt.values, "subset-sum values");
    sub->add_option("--T", opt.big_target, "subset-sum target");
    sub->add_option("--L", opt.big_target, "knapsack target");
    sub->add_option("--subset", opt.subset, "1-based item indices priced low");
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
    return dispatch(app.get_subcommands().front()->get_name(), opt, out);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pricing
