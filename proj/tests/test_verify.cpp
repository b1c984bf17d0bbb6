#include <gtest/gtest.h>

#include <set>

#include "bnorder/verify.hpp"

using namespace bnorder;

namespace {

const std::vector<std::string> kRequired = {
    "lem11",        "lem11a",        "cor11",        "adja1",        "strange0",
    "strange1",     "strange2",      "rem12",        "propasy",      "lemasy3",
    "expsubasy",    "expab1_unique", "direct_equiv", "mainbn",       "ordmon",
    "ordfam",       "ordomg",        "expeq",        "expasym2",     "pieri1_bound",
    "pieri3_consistency", "badexp_chain", "rembn_counterexample"};

}  // namespace

TEST(Verify, EveryRequiredCheckIsRegistered) {
  for (const auto& name : kRequired) EXPECT_NE(find_check(name), nullptr) << name;
  std::set<std::string> names;
  for (const auto& spec : check_registry()) EXPECT_TRUE(names.insert(spec.name).second);
}

TEST(Verify, NamedExamples) {
  const CheckReport rembn = run_check("rembn_counterexample", WeightParams(2, 1), 5);
  EXPECT_TRUE(rembn.pass);
  ASSERT_FALSE(rembn.witnesses.empty());
  EXPECT_EQ(rembn.witnesses.front(), "(2.2.1|-) <= (-|3.2) in ab, not in L");

  const CheckReport badexp = run_check("badexp_chain", WeightParams(2, 3), 2);
  EXPECT_TRUE(badexp.pass);
  EXPECT_GT(badexp.instances, 0);

  const CheckReport mainbn = run_check("mainbn", WeightParams(1, 1), 3);
  EXPECT_TRUE(mainbn.pass);
  EXPECT_TRUE(mainbn.witnesses.empty());
  EXPECT_EQ(mainbn.check_name, "mainbn");
  EXPECT_EQ(mainbn.n, 3);
}

TEST(Verify, RefusesBadRequests) {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const CheckError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind_of([] { run_check("nosuchcheck", WeightParams(1, 1), 2); }),
            static_cast<int>(CheckError::Kind::unknown_check));
  EXPECT_EQ(kind_of([] { run_check("mainbn", WeightParams(1, 1), 6); }),
            static_cast<int>(CheckError::Kind::beyond_bound));
  EXPECT_EQ(kind_of([] { run_check("propasy", WeightParams(1, 1), 4); }),
            static_cast<int>(CheckError::Kind::wrong_regime));
  EXPECT_EQ(kind_of([] { run_check("mainbn", WeightParams(0, 1), 3); }),
            static_cast<int>(CheckError::Kind::wrong_regime));
  EXPECT_EQ(kind_of([] { run_suite({"mainbn", "nosuchcheck"}); }),
            static_cast<int>(CheckError::Kind::unknown_check));
}

TEST(Verify, CounterexampleSearch) {
  const auto found = counterexample_search(WeightParams(2, 1), 5);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found.front().first.to_string(), "2.2.1|-");
  EXPECT_EQ(found.front().second.to_string(), "-|3.2");
  for (int n = 0; n <= 5; ++n) {
    EXPECT_TRUE(counterexample_search(WeightParams(1, 1), n).empty());
    EXPECT_TRUE(counterexample_search(WeightParams(1, n), n).empty());
  }
  EXPECT_THROW(counterexample_search(WeightParams(0, 1), 2), std::domain_error);
}

TEST(Verify, ReportsAreDeterministic) {
  const CheckReport x = run_check("lem11", WeightParams(2, 2), 4);
  const CheckReport y = run_check("lem11", WeightParams(2, 2), 4);
  EXPECT_EQ(x.instances, y.instances);
  EXPECT_EQ(x.pass, y.pass);
  EXPECT_EQ(x.witnesses, y.witnesses);
}

TEST(Verify, WitnessListIsCapped) {
  CheckContext ctx;
  for (int i = 0; i < 25; ++i) ctx.expect(false, [i] { return std::to_string(i); });
  EXPECT_EQ(ctx.instances(), 25);
  EXPECT_EQ(ctx.violations(), 25);
  EXPECT_EQ(ctx.witnesses().size(), kWitnessCap);
  EXPECT_EQ(ctx.witnesses().front(), "0");
}

TEST(Verify, JsonAndSummary) {
  const auto reports = run_suite({"strange0", "badexp_chain"}, 3);
  ASSERT_EQ(reports.size(), 5u);  // strange0 at n = 0..3, badexp_chain at n = 2
  const auto j = reports.back().to_json();
  for (const char* key : {"check", "a", "b", "n", "instances", "violations", "pass", "witnesses", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(reports.front().to_json().at("a").is_null());
  const std::string jsonl = reports_to_jsonl(reports);
  EXPECT_EQ(std::count(jsonl.begin(), jsonl.end(), '\n'), 5);
  const std::string table = summary_table(reports);
  EXPECT_NE(table.find("5 runs, 0 failed"), std::string::npos);
}

TEST(Verify, FullDefaultSuitePasses) {
  const auto reports = run_suite();
  std::set<std::string> covered;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass) << r.check_name << " n=" << r.n
                        << (r.witnesses.empty() ? "" : ": " + r.witnesses.front());
    if (!r.pass) EXPECT_FALSE(r.witnesses.empty());
    covered.insert(r.check_name);
  }
  EXPECT_EQ(covered.size(), check_registry().size());
}
