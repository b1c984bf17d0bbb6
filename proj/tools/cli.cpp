#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnorder/biporders.hpp"
#include "bnorder/order_io.hpp"
#include "bnorder/rep_bn.hpp"
#include "bnorder/symbol.hpp"
#include "bnorder/type_dn.hpp"
#include "bnorder/verify.hpp"

namespace bnorder::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultLBound = 5;

const char* const kFooter =
    "TSV columns:\n"
    "  order, hasse   lower<TAB>upper, one pair per line after a '#lower\\tupper' header\n"
    "                 (order lists every strict pair, hasse only covers between class\n"
    "                 representatives)\n"
    "  diff           lower<TAB>upper<TAB>relation holding the pair\n"
    "  afun           label<TAB>a<TAB>omega<TAB>family index\n"
    "  families       family index<TAB>label\n"
    "  symbol         key<TAB>value\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int a = 1;
  int b = 1;
  std::optional<int> n;
  std::optional<int> level;
  std::string format;
  std::string kind = "ab";
  std::string diff;
  std::optional<int> bound;
  std::vector<std::string> labels;
  std::vector<std::string> checks;
  bool all = false;
  bool list = false;
};

std::string pick_format(const Config& c, bool tty) {
  if (!c.format.empty()) return c.format;
  return tty ? "pretty" : "json";
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const std::string& command) {
  for (const char* f : allowed)
    if (format == f) return;
  throw UsageError(command + " does not support --format " + format);
}

int require_n(const Config& c, const std::string& command) {
  if (!c.n) throw UsageError(command + " needs -n");
  if (*c.n < 0) throw UsageError("-n must be non-negative");
  return *c.n;
}

std::vector<std::vector<std::string>> family_labels(const std::vector<std::vector<Bipartition>>& fs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : fs) out.push_back(labels_of(f));
  return out;
}

OrderRelation build_relation(const std::string& kind, const Config& c, int n) {
  const WeightParams p(c.a, c.b);
  if (kind == "ab") return ab_relation(p, n);
  if (kind == "L") {
    const int bound = c.bound.value_or(kDefaultLBound);
    if (n > bound)
      throw UsageError("n = " + std::to_string(n) + " exceeds the preceq_L bound " +
                       std::to_string(bound) + " (raise it with --bound)");
    OrderRelation rel = default_preceq_cache().get(p, n)->relation(n);
    return rel;
  }
  if (kind == "dominance") return dominance_relation(n);
  if (kind == "pi") return pi_relation(p, n);
  if (kind == "dn") return dn_relation(n);
  throw UsageError("unknown relation kind '" + kind + "'");
}

std::vector<std::vector<std::string>> relation_families(const std::string& kind, const Config& c,
                                                        int n) {
  if (kind != "ab" && kind != "L") return {};
  return family_labels(lusztig_families(WeightParams(c.a, c.b), n));
}

// ------------------------------------------------------------------ symbol

int cmd_symbol(const Config& c, const std::string& format, std::ostream& out) {
  if (c.labels.size() != 1) throw UsageError("symbol takes exactly one bipartition");
  const WeightParams p(c.a, c.b);
  if (!p.has_symbols()) throw std::domain_error("symbols need a > 0");
  const Bipartition bp = Bipartition::parse(c.labels.front());
  if (c.n && *c.n != bp.size())
    throw std::invalid_argument(bp.to_string() + " has rank " + std::to_string(bp.size()) +
                                ", not " + std::to_string(*c.n));
  const int level = c.level.value_or(minimal_level(p, bp));
  const SymbolMultiset z = z_multiset(p, bp, level);
  const SymbolRows rows = symbol_rows(p, bp, level);
  const ValidityReport valid = validate(z);
  const long long a_value = a_ab(p, bp);
  const long long om = omega(p, bp);

  require_format(format, {"json", "tsv", "pretty"}, "symbol");
  if (format == "json") {
    json j = symbol_to_json(z);
    j["bipartition"] = bp.to_string();
    j["rows"] = {{"top", rows.top}, {"bottom", rows.bottom}};
    j["a_invariant"] = a_value;
    j["omega"] = om;
    j["valid"] = valid.strict();
    j["validity"] = valid.to_string();
    out << j.dump() << '\n';
    return 0;
  }
  auto join = [](const auto& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
  };
  const std::vector<int> entries(z.entries().begin(), z.entries().end());
  if (format == "tsv") {
    out << "bipartition\t" << bp.to_string() << "\nN\t" << level << "\nentries\t"
        << join(entries, ",") << "\ntop\t" << join(rows.top, ",") << "\nbottom\t"
        << join(rows.bottom, ",") << "\na\t" << a_value << "\nomega\t" << om << "\nvalid\t"
        << (valid.strict() ? "yes" : "no") << '\n';
    return 0;
  }
  out << "Z" << p.to_string() << " of (" << bp.to_string() << ") at N=" << level << ", r=" << p.r()
      << ", b'=" << p.bprime() << '\n'
      << "  entries  " << join(entries, " ") << '\n'
      << "  symbol   " << join(rows.top, " ") << '\n'
      << "           " << join(rows.bottom, " ") << '\n'
      << "  a        " << a_value << '\n'
      << "  omega    " << om << '\n'
      << "  validity " << valid.to_string() << '\n';
  return 0;
}

// ------------------------------------------------------------------ afun / families

int cmd_afun(const Config& c, const std::string& format, std::ostream& out) {
  const WeightParams p(c.a, c.b);
  std::vector<Bipartition> bps;
  if (c.labels.empty()) {
    bps = bipartitions_of(require_n(c, "afun"));
  } else {
    for (const auto& label : c.labels) bps.push_back(Bipartition::parse(label));
  }
  require_format(format, {"json", "tsv", "pretty"}, "afun");
  json rows = json::array();
  std::ostringstream text;
  if (format == "tsv") text << "#label\ta\tomega\tfamily\n";
  for (const auto& bp : bps) {
    const auto families = lusztig_families(p, bp.size());
    std::size_t family = 0;
    for (std::size_t f = 0; f < families.size(); ++f)
      for (const auto& m : families[f])
        if (m == bp) family = f;
    const long long av = a_invariant(p, bp);
    const long long om = omega(p, bp);
    rows.push_back({{"label", bp.to_string()}, {"a", av}, {"omega", om}, {"family", family}});
    if (format == "tsv") text << bp.to_string() << '\t' << av << '\t' << om << '\t' << family << '\n';
    if (format == "pretty")
      text << "  (" << bp.to_string() << ")  a=" << av << "  omega=" << om << "  family " << family
           << '\n';
  }
  if (format == "json") {
    out << rows.dump() << '\n';
  } else {
    out << text.str();
  }
  return 0;
}

int cmd_families(const Config& c, const std::string& format, std::ostream& out) {
  const WeightParams p(c.a, c.b);
  const int n = require_n(c, "families");
  const auto families = lusztig_families(p, n);
  require_format(format, {"json", "tsv", "pretty"}, "families");
  if (format == "json") {
    out << json(family_labels(families)).dump() << '\n';
    return 0;
  }
  if (format == "tsv") out << "#family\tlabel\n";
  for (std::size_t f = 0; f < families.size(); ++f) {
    if (format == "tsv") {
      for (const auto& bp : families[f]) out << f << '\t' << bp.to_string() << '\n';
      continue;
    }
    out << "  [" << f << "]";
    for (const auto& bp : families[f]) {
      out << " (" << bp.to_string() << ")";
      const bool special = p.a() == 1 && p.b() <= 1 &&
                           is_special(p.b() == 1 ? SpecialKind::equal_parameter : SpecialKind::type_d, bp);
      if (special) out << '*';
    }
    out << '\n';
  }
  return 0;
}

// ------------------------------------------------------------------ order / hasse / diff

void print_diff(const OrderRelation& lhs, const std::string& lname, const OrderRelation& rhs,
                const std::string& rname, const std::string& format, std::ostream& out) {
  if (lhs.ground() != rhs.ground()) throw UsageError(lname + " and " + rname + " have different ground sets");
  const auto only_l = relation_difference(lhs, rhs);
  const auto only_r = relation_difference(rhs, lhs);
  auto labelled = [&](const std::vector<OrderRelation::Pair>& pairs) {
    json arr = json::array();
    for (auto [i, j] : pairs) arr.push_back({lhs.ground()[i], lhs.ground()[j]});
    return arr;
  };
  require_format(format, {"json", "tsv", "pretty"}, "diff");
  if (format == "json") {
    out << json{{"lhs", lname}, {"rhs", rname}, {"only_lhs", labelled(only_l)},
                {"only_rhs", labelled(only_r)}}.dump()
        << '\n';
    return;
  }
  if (format == "tsv") {
    out << "#lower\tupper\tonly_in\n";
    for (auto [i, j] : only_l) out << lhs.ground()[i] << '\t' << lhs.ground()[j] << '\t' << lname << '\n';
    for (auto [i, j] : only_r) out << lhs.ground()[i] << '\t' << lhs.ground()[j] << '\t' << rname << '\n';
    return;
  }
  auto section = [&](const std::vector<OrderRelation::Pair>& pairs, const std::string& in,
                     const std::string& notin) {
    out << "in " << in << ", not in " << notin << ": " << pairs.size() << '\n';
    for (auto [i, j] : pairs) out << "  (" << lhs.ground()[i] << ") <= (" << lhs.ground()[j] << ")\n";
  };
  section(only_l, lname, rname);
  section(only_r, rname, lname);
}

int cmd_order(const Config& c, const std::string& format, std::ostream& out) {
  const int n = require_n(c, "order");
  const OrderRelation rel = build_relation(c.kind, c, n);
  if (!c.diff.empty()) {
    print_diff(rel, c.kind, build_relation(c.diff, c, n), c.diff, format, out);
    return 0;
  }
  if (format == "json") {
    out << relation_to_json(rel).dump() << '\n';
  } else if (format == "tsv") {
    out << relation_to_tsv(rel);
  } else if (format == "dot") {
    out << relation_to_dot(rel, relation_families(c.kind, c, n));
  } else {
    out << relation_to_pretty(rel);
  }
  return 0;
}

int cmd_hasse(const Config& c, const std::string& format, std::ostream& out) {
  const int n = require_n(c, "hasse");
  const OrderRelation rel = build_relation(c.kind, c, n);
  if (format == "dot") {
    out << relation_to_dot(rel, relation_families(c.kind, c, n));
    return 0;
  }
  if (format == "pretty") {
    out << relation_to_pretty(rel);
    return 0;
  }
  const HasseDiagram h = hasse_diagram(rel);
  if (format == "tsv") {
    out << "#lower\tupper\n";
    for (auto [lo, hi] : h.covers)
      out << rel.ground()[h.classes[lo].front()] << '\t' << rel.ground()[h.classes[hi].front()] << '\n';
    return 0;
  }
  json classes = json::array();
  for (const auto& cls : h.classes) {
    json members = json::array();
    for (std::size_t m : cls) members.push_back(rel.ground()[m]);
    classes.push_back(std::move(members));
  }
  out << json{{"classes", classes}, {"covers", h.covers}, {"metadata", rel.metadata()}}.dump() << '\n';
  return 0;
}

int cmd_diff(const Config& c, const std::string& format, std::ostream& out) {
  if (c.labels.size() != 2) throw UsageError("diff takes two relation kinds");
  const int n = require_n(c, "diff");
  print_diff(build_relation(c.labels[0], c, n), c.labels[0], build_relation(c.labels[1], c, n),
             c.labels[1], format, out);
  return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const Config& c, const std::string& format, std::ostream& out) {
  require_format(format, {"json", "pretty"}, "verify");
  if (c.list) {
    for (const auto& spec : check_registry())
      out << spec.name << "  n<=" << spec.max_n << "  [" << spec.regime << "]  " << spec.statement
          << '\n';
    return 0;
  }
  if (c.all == !c.checks.empty()) throw UsageError("verify needs check names or --all");
  for (const auto& name : c.checks)
    if (!find_check(name)) throw CheckError(CheckError::Kind::unknown_check, "unknown check '" + name + "'");

  std::vector<CheckReport> reports;
  if (c.n) {
    if (c.all) throw UsageError("-n selects a single point; combine it with check names");
    for (const auto& name : c.checks) reports.push_back(run_check(name, WeightParams(c.a, c.b), *c.n));
  } else {
    reports = run_suite(c.checks, c.bound);
  }
  if (format == "json") {
    out << reports_to_jsonl(reports);
  } else {
    out << summary_table(reports);
  }
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

void add_params(CLI::App* sub, Config& c) {
  sub->add_option("-a", c.a, "weight of the generators s_1..s_{n-1}")->check(CLI::NonNegativeNumber);
  sub->add_option("-b", c.b, "weight of the generator t")->check(CLI::NonNegativeNumber);
}

void add_format(CLI::App* sub, Config& c, std::vector<std::string> allowed) {
  sub->add_option("--format", c.format, "output format (default: pretty on a terminal, json otherwise)")
      ->check(CLI::IsMember(std::move(allowed)));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool tty) {
  CLI::App app{"Orders on the irreducible characters of W(B_n) with unequal parameters", "bnorder"};
  app.footer(kFooter);
  app.require_subcommand(1, 1);
  Config c;
  const std::vector<std::string> kinds = {"ab", "L", "dominance", "pi", "dn"};

  auto* symbol = app.add_subcommand("symbol", "symbol of a bipartition, with a-invariant and omega");
  add_params(symbol, c);
  symbol->add_option("-n", c.n, "rank (checked against the bipartition)");
  symbol->add_option("-N,--level", c.level, "level N (default: smallest possible)");
  symbol->add_option("bipartition", c.labels, "bipartition as 'lambda|mu', e.g. 4.3.1.1|3.2")
      ->required();
  add_format(symbol, c, {"json", "tsv", "pretty"});

  auto* afun = app.add_subcommand("afun", "a-invariant, omega and family index");
  add_params(afun, c);
  afun->add_option("-n", c.n, "rank (all bipartitions of n)");
  afun->add_option("bipartitions", c.labels, "bipartitions (default: all of rank n)");
  add_format(afun, c, {"json", "tsv", "pretty"});

  auto* families = app.add_subcommand("families", "families of Irr(W_n); '*' marks special members");
  add_params(families, c);
  families->add_option("-n", c.n, "rank")->required();
  add_format(families, c, {"json", "tsv", "pretty"});

  auto* order = app.add_subcommand("order", "one of the orders, or its difference with another");
  add_params(order, c);
  order->add_option("-n", c.n, "rank")->required();
  order->add_option("--kind", c.kind, "relation: ab, L, dominance, pi or dn")
      ->check(CLI::IsMember(kinds));
  order->add_option("--diff", c.diff, "print the pairs where --kind and this relation differ")
      ->check(CLI::IsMember(kinds));
  order->add_option("--bound", c.bound, "largest n accepted for --kind L (default 5)");
  add_format(order, c, {"json", "tsv", "dot", "pretty"});

  auto* hasse = app.add_subcommand("hasse", "covering pairs between classes of a relation");
  add_params(hasse, c);
  hasse->add_option("-n", c.n, "rank")->required();
  hasse->add_option("--kind", c.kind, "relation: ab, L, dominance, pi or dn")
      ->check(CLI::IsMember(kinds));
  hasse->add_option("--bound", c.bound, "largest n accepted for --kind L (default 5)");
  add_format(hasse, c, {"json", "tsv", "dot", "pretty"});

  auto* diff = app.add_subcommand("diff", "pairs on which two relations differ");
  add_params(diff, c);
  diff->add_option("-n", c.n, "rank")->required();
  diff->add_option("kinds", c.labels, "two of: ab, L, dominance, pi, dn")
      ->expected(2)
      ->check(CLI::IsMember(kinds));
  diff->add_option("--bound", c.bound, "largest n accepted for L (default 5)");
  add_format(diff, c, {"json", "tsv", "pretty"});

  auto* verify = app.add_subcommand("verify", "run named checks, or the whole suite");
  add_params(verify, c);
  verify->add_option("checks", c.checks, "check names");
  verify->add_flag("--all", c.all, "every check at its default points");
  verify->add_flag("--list", c.list, "list the registered checks");
  verify->add_option("-n", c.n, "run the named checks at this single point (with -a, -b)");
  verify->add_option("--bound", c.bound, "lower every check's bound to this n");
  add_format(verify, c, {"json", "pretty"});

  // Labels with an empty first component start with '-'; a leading space
  // keeps CLI11 from reading them as flags.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string arg = argv[i];
    if (arg.size() > 1 && arg[0] == '-' && arg.find('|') != std::string::npos) arg.insert(0, " ");
    args.push_back(std::move(arg));
  }
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto& label : c.labels) label.erase(0, label.find_first_not_of(' '));
  const std::string format = pick_format(c, tty);
  try {
    if (symbol->parsed()) return cmd_symbol(c, format, out);
    if (afun->parsed()) return cmd_afun(c, format, out);
    if (families->parsed()) return cmd_families(c, format, out);
    if (order->parsed()) return cmd_order(c, format, out);
    if (hasse->parsed()) return cmd_hasse(c, format, out);
    if (diff->parsed()) return cmd_diff(c, format, out);
    return cmd_verify(c, format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const CheckError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bnorder::cli
