#pragma once

#include <string>

#include "pricing/cells.hpp"
#include "pricing/model.hpp"

namespace pricing {

// Instance files are JSON with rationals as strings, e.g.
//   {"items": [{"values": ["10"], "probs": ["1"]},
//              {"values": ["8", "12"], "probs": ["1/2", "1/2"]}]}
// Serialization is canonical (lowest terms, stable key order), so
// parse(serialize(x)) == x byte for byte. Unknown fields are rejected.
PricingInstance parse_instance(const std::string& text);
std::string serialize_instance(const PricingInstance& inst);

// Cell files are JSON lists of relation triples over 1-based items:
//   {"constraints": [{"lhs": "p1", "rel": "<=", "rhs": "5"},
//                    {"lhs": "p1-p2", "rel": "=", "rhs": "-2"}]}
CellDescription parse_cell(const std::string& text, std::size_t n_items);
std::string serialize_cell(const CellDescription& cell);

// FNV-1a over the canonical serialization, as a hex string.
std::string instance_digest(const PricingInstance& inst);

}  // namespace pricing
