#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bnorder/order_relation.hpp"
#include "bnorder/rep_bn.hpp"
#include "bnorder/symbol.hpp"

namespace bnorder {

/// {"ground": [...], "pairs": [[i, j], ...], "metadata": {...}} with ground
/// indices, lower first. Only non-reflexive pairs are listed.
nlohmann::json relation_to_json(const OrderRelation& rel);
/// Inverse of relation_to_json; throws std::invalid_argument on unknown labels.
OrderRelation relation_from_json(const nlohmann::json& j);

/// The rank-k relation with its elementary-pair log under "provenance".
nlohmann::json table_to_json(const PreceqLTable& table, int k);

nlohmann::json symbol_to_json(const SymbolMultiset& z);

/// "lower<TAB>upper" per non-reflexive pair, after a "#lower\tupper" header.
std::string relation_to_tsv(const OrderRelation& rel);

/// Hasse diagram of the class quotient. Each node lists its members; nodes
/// share a fill colour when their members lie in the same family. With no
/// families given, every class is its own family.
std::string relation_to_dot(const OrderRelation& rel,
                            const std::vector<std::vector<std::string>>& families = {});

/// Classes, then covering pairs, one per line.
std::string relation_to_pretty(const OrderRelation& rel);

}  // namespace bnorder
