#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mulli/enumeration.hpp"
#include "mulli/partition.hpp"
#include "mulli/rim.hpp"
#include "mulli/symbol.hpp"

namespace mulli {

// Text forms
//   partition: "5,2,2,1" (canonical), "5,2^2,1" accepted, "()" is empty.
//   symbol:    "9 5 5 / 4 2 2" (a row, slash, r row).

/// Accepts the comma form with optional exponents, or a JSON array.
/// Parts are sorted into weakly decreasing order. Throws parse_error.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& lambda);

std::string format_symbol(const Symbol& symbol);
Symbol parse_symbol(std::string_view text, Modulus p, SymbolKind kind = SymbolKind::mullineux);

// JSON forms
//   partition: [5,2,2,1]
//   node set:  [[1,6],[1,7],...] in lexicographic order
//   symbol:    {"p":5,"a":[9,5,5],"r":[4,2,2]}, plus "kind":"bg" for BG-symbols

nlohmann::json partition_to_json(const Partition& lambda);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json node_set_to_json(const NodeSet& nodes);
NodeSet node_set_from_json(const nlohmann::json& j);

nlohmann::json symbol_to_json(const Symbol& symbol);
Symbol symbol_from_json(const nlohmann::json& j);

nlohmann::json census_to_json(const CensusReport& report);

/// One row per partition of n with 0/1 family flags and, for BG rows, the
/// self-Mullineux partner. Rows in decreasing lexicographic order.
std::string census_to_csv(const CensusReport& report);

}  // namespace mulli
