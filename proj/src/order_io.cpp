#include "bnorder/order_io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace bnorder {

using nlohmann::json;

json relation_to_json(const OrderRelation& rel) {
  json pairs = json::array();
  for (auto [i, j] : rel.strict_pairs()) pairs.push_back({i, j});
  return {{"ground", rel.ground()}, {"pairs", std::move(pairs)}, {"metadata", rel.metadata()}};
}

OrderRelation relation_from_json(const json& j) {
  auto ground = j.at("ground").get<std::vector<std::string>>();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (!index.emplace(ground[i], i).second)
      throw std::invalid_argument("relation JSON: duplicate label '" + ground[i] + "'");
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw std::invalid_argument("relation JSON: unknown label '" + label + "'");
    return it->second;
  };
  // entries may be ground indices or labels
  auto resolve = [&](const json& e) -> std::size_t {
    if (e.is_string()) return lookup(e.get<std::string>());
    const auto i = e.get<std::size_t>();
    if (i >= ground.size()) throw std::invalid_argument("relation JSON: index out of range");
    return i;
  };
  std::vector<OrderRelation::Pair> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("relation JSON: pairs must be [lower, upper]");
    pairs.emplace_back(resolve(p[0]), resolve(p[1]));
  }
  OrderRelation rel = OrderRelation::from_pairs(std::move(ground), pairs);
  if (j.contains("metadata"))
    rel.metadata() = j.at("metadata").get<std::map<std::string, std::string>>();
  return rel;
}

json table_to_json(const PreceqLTable& table, int k) {
  json out = relation_to_json(table.relation(k));
  json log = json::array();
  for (const auto& e : table.provenance(k))
    log.push_back({{"k", e.k},
                   {"l", e.l},
                   {"M", e.lower_source.to_string()},
                   {"M'", e.upper_source.to_string()},
                   {"case", to_string(e.step)},
                   {"E", e.lower.to_string()},
                   {"E'", e.upper.to_string()}});
  out["provenance"] = std::move(log);
  return out;
}

json symbol_to_json(const SymbolMultiset& z) {
  const WeightParams& p = z.params();
  return {{"a", p.a()},       {"b", p.b()},
          {"N", z.level()},   {"r", p.r()},
          {"n", z.rank()},    {"entries", std::vector<int>(z.entries().begin(), z.entries().end())}};
}

std::string relation_to_tsv(const OrderRelation& rel) {
  std::ostringstream out;
  out << "#lower\tupper\n";
  for (auto [i, j] : rel.strict_pairs()) out << rel.ground()[i] << '\t' << rel.ground()[j] << '\n';
  return out.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string class_label(const OrderRelation& rel, const std::vector<std::size_t>& cls) {
  std::string out;
  for (std::size_t m : cls) {
    if (!out.empty()) out += "\\n";
    out += dot_escape(rel.ground()[m]);
  }
  return out;
}

}  // namespace

std::string relation_to_dot(const OrderRelation& rel,
                            const std::vector<std::vector<std::string>>& families) {
  static const char* const palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                        "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
                                        "#ccebc5", "#ffed6f"};
  constexpr std::size_t palette_size = sizeof(palette) / sizeof(palette[0]);

  const HasseDiagram h = hasse_diagram(rel);
  std::map<std::string, std::size_t> family_of;
  for (std::size_t f = 0; f < families.size(); ++f)
    for (const auto& label : families[f]) family_of[label] = f;

  std::ostringstream out;
  out << "digraph order {\n  rankdir=BT;\n  node [shape=box, style=filled];\n";
  for (std::size_t c = 0; c < h.classes.size(); ++c) {
    const std::string& first = rel.ground()[h.classes[c].front()];
    auto it = family_of.find(first);
    const std::size_t colour = it != family_of.end() ? it->second : c;
    out << "  c" << c << " [label=\"" << class_label(rel, h.classes[c]) << "\", fillcolor=\""
        << palette[colour % palette_size] << "\"];\n";
  }
  for (auto [lo, hi] : h.covers) out << "  c" << lo << " -> c" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string relation_to_pretty(const OrderRelation& rel) {
  const HasseDiagram h = hasse_diagram(rel);
  auto name = [&](std::size_t c) {
    std::string out;
    for (std::size_t m : h.classes[c]) out += (out.empty() ? "" : " ~ ") + rel.ground()[m];
    return out;
  };
  std::ostringstream out;
  if (!rel.metadata().empty()) {
    out << "relation";
    for (const auto& [k, v] : rel.metadata()) out << ' ' << k << '=' << v;
    out << '\n';
  }
  out << h.classes.size() << " classes on " << rel.size() << " labels\n";
  for (std::size_t c = 0; c < h.classes.size(); ++c) out << "  [" << c << "] " << name(c) << '\n';
  out << h.covers.size() << " covers (lower < upper)\n";
  for (auto [lo, hi] : h.covers) out << "  " << name(lo) << "  <  " << name(hi) << '\n';
  return out.str();
}

}  // namespace bnorder
