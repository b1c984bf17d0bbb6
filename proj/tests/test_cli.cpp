#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "bnorder/order_io.hpp"
#include "cli.hpp"
#include "dot_graph.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, bool tty = false) {
  args.insert(args.begin(), "bnorder");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = bnorder::cli::run(static_cast<int>(argv.size()), argv.data(), out, err, tty);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SymbolGoldenValues) {
  auto r = run({"symbol", "-a", "1", "-b", "1", "-n", "14", "4.3.1.1|3.2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("entries"), json({7, 5, 5, 3, 2, 1, 0}));

  r = run({"symbol", "-a", "2", "-b", "1", "4.3.1.1|3.2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("entries"), json({15, 12, 11, 8, 5, 3, 2, 0}));
  EXPECT_EQ(j.at("rows").at("top"), json({15, 11, 5, 3}));
  EXPECT_TRUE(j.at("valid").get<bool>());

  r = run({"symbol", "-a", "1", "-b", "1", "-|-"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("entries"), json({0}));

  r = run({"symbol", "-a", "1", "-b", "1", "-N", "5", "4.3.1.1|3.2"});
  EXPECT_EQ(json::parse(r.out).at("entries"), json({9, 7, 7, 5, 4, 3, 2, 1, 1, 0, 0}));
}

TEST(Cli, SymbolErrors) {
  EXPECT_EQ(run({"symbol", "-a", "0", "-b", "1", "1|-"}).code, 1);
  EXPECT_EQ(run({"symbol", "-a", "1", "-b", "1", "1.2|-"}).code, 1);
  EXPECT_EQ(run({"symbol", "-a", "1", "-b", "1", "-n", "3", "1|-"}).code, 1);
  EXPECT_EQ(run({"symbol", "-a", "1", "-b", "1", "--format", "dot", "1|-"}).code, 2);
}

TEST(Cli, OrderBadExampleChainAsTsv) {
  const auto r = run({"order", "--kind", "ab", "-a", "2", "-b", "3", "-n", "2", "--format", "tsv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') ++rows;
  EXPECT_EQ(rows, 10);
  EXPECT_NE(r.out.find("-|1.1\t-|2"), std::string::npos);
}

TEST(Cli, OrderDiffs) {
  auto r = run({"order", "--kind", "L", "-a", "2", "-b", "1", "-n", "5", "--diff", "ab"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j.at("only_lhs").empty());
  EXPECT_EQ(j.at("only_rhs"), json::parse(R"([["2.2.1|-","-|3.2"]])"));

  r = run({"order", "--kind", "ab", "-a", "1", "-b", "5", "-n", "5", "--diff", "dominance"});
  j = json::parse(r.out);
  EXPECT_TRUE(j.at("only_lhs").empty());
  EXPECT_TRUE(j.at("only_rhs").empty());

  r = run({"diff", "L", "ab", "-a", "2", "-b", "1", "-n", "5", "--format", "tsv"});
  EXPECT_NE(r.out.find("2.2.1|-\t-|3.2\tab"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
  for (const char* kind : {"ab", "L", "dominance", "dn"}) {
    const auto r = run({"order", "--kind", kind, "-a", "2", "-b", "1", "-n", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    const bnorder::OrderRelation rel = bnorder::relation_from_json(j);
    EXPECT_EQ(bnorder::relation_to_json(rel), j) << kind;
  }
}

TEST(Cli, DotOutputIsAcyclic) {
  for (const char* kind : {"ab", "L", "dominance", "pi"}) {
    const auto r = run({"hasse", "--kind", kind, "-a", "2", "-b", "3", "-n", "4", "--format", "dot"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
    const auto g = testdot::parse(r.out);
    EXPECT_GT(g.nodes, 0u);
    EXPECT_TRUE(testdot::acyclic(g)) << kind;
  }
}

TEST(Cli, BoundOnPreceqL) {
  EXPECT_EQ(run({"order", "--kind", "L", "-a", "1", "-b", "1", "-n", "6"}).code, 2);
  EXPECT_EQ(run({"order", "--kind", "L", "-a", "1", "-b", "1", "-n", "6", "--bound", "6"}).code, 0);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "mainbn", "-a", "3", "-b", "2", "-n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("check"), "mainbn");
  EXPECT_TRUE(j.at("pass").get<bool>());

  r = run({"verify", "nosuchcheck"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("nosuchcheck"), std::string::npos);

  EXPECT_EQ(run({"verify", "mainbn", "-n", "9"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--all", "--bound", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "--list"}).code, 0);
}

TEST(Cli, FormatDefaultsDependOnTerminal) {
  const auto piped = run({"families", "-a", "1", "-b", "1", "-n", "2"}, false);
  EXPECT_NO_THROW(json::parse(piped.out));
  const auto tty = run({"families", "-a", "1", "-b", "1", "-n", "2"}, true);
  EXPECT_THROW(json::parse(tty.out), json::parse_error);
  EXPECT_NE(tty.out.find("[0]"), std::string::npos);
}

TEST(Cli, AfunAndFamilies) {
  auto r = run({"afun", "-a", "2", "-b", "1", "-|2.2.1", "3.2|-"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0].at("label"), "-|2.2.1");

  r = run({"families", "-a", "1", "-b", "4", "-n", "5"});
  j = json::parse(r.out);
  std::size_t largest = 0;
  for (const auto& f : j) largest = std::max(largest, f.size());
  EXPECT_EQ(largest, 6u);

  r = run({"afun", "-a", "0", "-b", "2", "-n", "2", "--format", "tsv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("#label\ta\tomega\tfamily", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"order", "-n", "2", "--kind", "nope"}).code, 2);
  EXPECT_EQ(run({"order", "-a", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
