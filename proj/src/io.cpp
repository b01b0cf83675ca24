#include "pricing/io.hpp"

#include <cstdint>

#include <json.hpp>

#include "pricing/errors.hpp"

namespace pricing {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::ParseError, "malformed JSON");
  return doc;
}

void expect_keys(const json& obj, std::initializer_list<const char*> keys,
                 const std::string& where) {
  if (!obj.is_object()) fail(Errc::ParseError, where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys)
      if (key == k) known = true;
    if (!known) fail(Errc::ParseError, where + ": unknown field '" + key + "'");
  }
}

std::vector<Rational> parse_rational_array(const json& arr, const std::string& where) {
  if (!arr.is_array()) fail(Errc::ParseError, where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const auto& entry : arr) {
    if (!entry.is_string()) fail(Errc::ParseError, where + ": rationals must be strings");
    out.push_back(parse_rational(entry.get<std::string>()));
  }
  return out;
}

// "p3" -> (2, nullopt); "p1-p2" -> (0, 1); 1-based in text, 0-based out.
std::pair<std::size_t, std::optional<std::size_t>> parse_lhs(const std::string& text,
                                                             std::size_t n_items) {
  auto parse_index = [&](const std::string& part) -> std::size_t {
    if (part.size() < 2 || part[0] != 'p')
      fail(Errc::ParseError, "constraint lhs must look like 'p1' or 'p1-p2'");
    std::size_t idx = 0;
    for (std::size_t i = 1; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        fail(Errc::ParseError, "bad item index in '" + part + "'");
      idx = idx * 10 + static_cast<std::size_t>(part[i] - '0');
    }
    if (idx < 1 || idx > n_items)
      fail(Errc::ParseError, "item index out of range in '" + part + "'");
    return idx - 1;
  };
  const auto dash = text.find('-');
  if (dash == std::string::npos) return {parse_index(text), std::nullopt};
  return {parse_index(text.substr(0, dash)), parse_index(text.substr(dash + 1))};
}

Rel parse_rel(const std::string& text) {
  if (text == "<") return Rel::LT;
  if (text == "<=") return Rel::LE;
  if (text == "=" || text == "==") return Rel::EQ;
  if (text == ">=") return Rel::GE;
  if (text == ">") return Rel::GT;
  fail(Errc::ParseError, "unknown relation '" + text + "'");
}

}  // namespace

PricingInstance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  expect_keys(doc, {"items"}, "instance");
  if (!doc.contains("items")) fail(Errc::ParseError, "instance: missing 'items'");
  const json& items = doc["items"];
  if (!items.is_array()) fail(Errc::ParseError, "instance: 'items' must be an array");

  PricingInstance inst;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string where = "item " + std::to_string(i + 1);
    expect_keys(items[i], {"values", "probs"}, where);
    if (!items[i].contains("values") || !items[i].contains("probs"))
      fail(Errc::ParseError, where + ": missing 'values' or 'probs'");
    ValueDistribution d;
    d.values = parse_rational_array(items[i]["values"], where + " values");
    d.probs = parse_rational_array(items[i]["probs"], where + " probs");
    inst.items.push_back(std::move(d));
  }
  return validate_instance(std::move(inst));
}

std::string serialize_instance(const PricingInstance& inst) {
  json items = json::array();
  for (const auto& item : inst.items) {
    json values = json::array();
    json probs = json::array();
    for (const auto& v : item.values) values.push_back(to_string(v));
    for (const auto& p : item.probs) probs.push_back(to_string(p));
    items.push_back(json{{"values", std::move(values)}, {"probs", std::move(probs)}});
  }
  json doc{{"items", std::move(items)}};
  return doc.dump(2) + "\n";
}

CellDescription parse_cell(const std::string& text, std::size_t n_items) {
  const json doc = parse_json(text);
  expect_keys(doc, {"constraints"}, "cell");
  if (!doc.contains("constraints")) fail(Errc::ParseError, "cell: missing 'constraints'");
  const json& list = doc["constraints"];
  if (!list.is_array()) fail(Errc::ParseError, "cell: 'constraints' must be an array");

  CellDescription cell;
  cell.n = n_items;
  for (const auto& entry : list) {
    expect_keys(entry, {"lhs", "rel", "rhs"}, "constraint");
    if (!entry.contains("lhs") || !entry.contains("rel") || !entry.contains("rhs"))
      fail(Errc::ParseError, "constraint: needs lhs, rel, rhs");
    const auto [first, second] = parse_lhs(entry["lhs"].get<std::string>(), n_items);
    const Rel rel = parse_rel(entry["rel"].get<std::string>());
    const Rational bound = parse_rational(entry["rhs"].get<std::string>());
    if (second)
      cell.diff_rels.push_back({first, *second, rel, bound});
    else
      cell.price_rels.push_back({first, rel, bound});
  }
  return cell;
}

std::string serialize_cell(const CellDescription& cell) {
  json list = json::array();
  for (const auto& c : cell.price_rels)
    list.push_back(json{{"lhs", "p" + std::to_string(c.item + 1)},
                        {"rel", rel_name(c.rel)},
                        {"rhs", to_string(c.bound)}});
  for (const auto& c : cell.diff_rels)
    list.push_back(
        json{{"lhs", "p" + std::to_string(c.lhs + 1) + "-p" + std::to_string(c.rhs + 1)},
             {"rel", rel_name(c.rel)},
             {"rhs", to_string(c.bound)}});
  json doc{{"constraints", std::move(list)}};
  return doc.dump(2) + "\n";
}

std::string instance_digest(const PricingInstance& inst) {
  const std::string canon = serialize_instance(inst);
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : canon) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (std::size_t i = 0; i < 16; ++i) out[15 - i] = hex[(hash >> (4 * i)) & 0xF];
  return out;
}

}  // namespace pricing
