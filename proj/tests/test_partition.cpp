#include <gtest/gtest.h>

#include "bnorder/bipartition.hpp"
#include "bnorder/partition.hpp"
#include "oracles.hpp"

using namespace bnorder;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

oracle::Parts parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace

TEST(Partition, CanonicalFormDropsZeros) {
  EXPECT_EQ(P({3, 1, 0, 0}), P({3, 1}));
  EXPECT_EQ(P({3, 1}).size(), 4);
  EXPECT_EQ(P({3, 1})[5], 0);
  EXPECT_EQ(P({2, 1}).padded(4), (std::vector<int>{2, 1, 0, 0}));
  EXPECT_THROW(P({1, 2}), std::invalid_argument);
  EXPECT_THROW(P({2, -1}), std::invalid_argument);
  EXPECT_THROW(P({2, 1}).padded(1), std::invalid_argument);
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("4.3.1.1"), P({4, 3, 1, 1}));
  EXPECT_EQ(Partition::parse("-"), Partition());
  EXPECT_EQ(P({4, 3, 1, 1}).to_string(), "4.3.1.1");
  EXPECT_EQ(Partition().to_string(), "-");
  EXPECT_THROW(Partition::parse("1.2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("x"), std::invalid_argument);
  EXPECT_EQ(Partition::parse(""), Partition());
}

TEST(Partition, EnumerationMatchesOracle) {
  for (int n = 0; n <= 12; ++n) {
    const auto lib = partitions_of(n);
    const auto ref = oracle::partitions(n);
    ASSERT_EQ(lib.size(), ref.size()) << n;
    for (std::size_t i = 0; i < lib.size(); ++i) EXPECT_EQ(parts_of(lib[i]), ref[i]);
  }
  EXPECT_EQ(partitions_of(5).front(), P({5}));
}

TEST(Partition, ConjugateExamples) {
  EXPECT_EQ(conjugate(P({4, 3, 1, 1})), P({4, 2, 2, 1}));
  EXPECT_EQ(conjugate(Partition()), Partition());
  EXPECT_EQ(conjugate(P({5})), P({1, 1, 1, 1, 1}));
}

TEST(Partition, ConjugateMatchesCellOracleAndIsInvolution) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(parts_of(conjugate(p)), oracle::conjugate(parts_of(p)));
      EXPECT_EQ(conjugate(conjugate(p)), p);
    }
}

TEST(Partition, DominanceExamples) {
  EXPECT_TRUE(dominance(P({2, 2, 1}), P({3, 1, 1})));
  EXPECT_FALSE(dominance(P({3, 1, 1}), P({2, 2, 1})));
  EXPECT_TRUE(dominance(P({3, 1, 1}), P({3, 1, 1})));
  EXPECT_THROW(dominance(P({2}), P({3})), std::invalid_argument);
  EXPECT_TRUE(dominance(P({2}), P({3}), Sizes::may_differ));
  EXPECT_FALSE(dominance(P({3}), P({2, 2}), Sizes::may_differ));
}

TEST(Partition, DominanceMatchesOracleAndReversesUnderConjugation) {
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& p : ps)
      for (const auto& q : ps) {
        const bool d = dominance(p, q);
        EXPECT_EQ(d, oracle::leq(parts_of(p), parts_of(q)));
        EXPECT_EQ(d, dominance(conjugate(q), conjugate(p)));
        if (d && p != q) EXPECT_LT(n_invariant(q), n_invariant(p));
      }
  }
}

TEST(Partition, NInvariantExamples) {
  EXPECT_EQ(n_invariant(P({6})), 0);
  EXPECT_EQ(n_invariant(P({1, 1, 1, 1})), 6);
  EXPECT_EQ(n_invariant(P({4, 3, 1, 1})), 8);
}

TEST(Partition, AddPart) {
  EXPECT_EQ(add_part(P({3, 1}), 2), P({3, 2, 1}));
  EXPECT_EQ(add_part(P({3, 1}), 0), P({3, 1}));
  EXPECT_EQ(add_part(Partition(), 5), P({5}));
}

TEST(BetaSet, Examples) {
  EXPECT_EQ(beta_set(P({2, 1}), 3), BetaSet({4, 2, 0}));
  EXPECT_EQ(beta_set(Partition(), 4), BetaSet({3, 2, 1, 0}));
  EXPECT_EQ(beta_set(P({7}), 1), BetaSet({7}));
  EXPECT_THROW(beta_set(P({2, 1}), 1), std::invalid_argument);
  EXPECT_EQ(partition_from_beta(BetaSet({4, 2, 0})), P({2, 1}));
  EXPECT_EQ(partition_from_beta(BetaSet({3, 2, 1, 0})), Partition());
  EXPECT_EQ(partition_from_beta(BetaSet({9, 3, 2, 1, 0})), P({5}));
  EXPECT_THROW(BetaSet({1, 1}), std::invalid_argument);
  EXPECT_THROW(BetaSet({-1}), std::invalid_argument);
}

TEST(BetaSet, HatComplementExamples) {
  EXPECT_EQ(hat_complement(beta_set(P({2, 1}), 3), 2), BetaSet({3, 1}));
  EXPECT_EQ(hat_complement(BetaSet({2, 1, 0}), 4), BetaSet({3, 2, 1, 0}));
  EXPECT_EQ(hat_complement(BetaSet({5}), 5), beta_set(P({1, 1, 1, 1, 1}), 5));
  EXPECT_THROW(hat_complement(BetaSet({9}), 2), std::invalid_argument);
}

TEST(BetaSet, RoundTripAndConjugateIdentity) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n))
      for (int m = p.length(); m <= p.length() + 3; ++m) {
        const BetaSet x = beta_set(p, m);
        EXPECT_EQ(x.count(), m);
        EXPECT_EQ(x.sum(), n + m * (m - 1) / 2);
        EXPECT_EQ(partition_from_beta(x), p);
        for (int out = std::max(0, x.max() + 1 - m); out <= x.max() + 3; ++out)
          EXPECT_EQ(partition_from_beta(hat_complement(x, out)), conjugate(p));
      }
}

TEST(BetaSet, DominanceNeedsEqualCountAndSum) {
  EXPECT_TRUE(dominance(BetaSet({4, 2, 0}), BetaSet({5, 1, 0})));
  EXPECT_THROW(dominance(BetaSet({4, 2}), BetaSet({5, 1, 0})), std::invalid_argument);
  EXPECT_THROW(dominance(BetaSet({4, 2}), BetaSet({5, 2})), std::invalid_argument);
}

TEST(Bipartition, ParseEnumerateAndOrder) {
  const Bipartition bp = Bipartition::parse("4.3.1.1|3.2");
  EXPECT_EQ(bp.first, P({4, 3, 1, 1}));
  EXPECT_EQ(bp.second, P({3, 2}));
  EXPECT_EQ(bp.size(), 14);
  EXPECT_EQ(bp.to_string(), "4.3.1.1|3.2");
  EXPECT_EQ(Bipartition::parse("-|-").size(), 0);
  EXPECT_THROW(Bipartition::parse("4.3"), std::invalid_argument);

  for (int n = 0; n <= 7; ++n) {
    const auto lib = bipartitions_of(n);
    const auto ref = oracle::bipartitions(n);
    ASSERT_EQ(lib.size(), ref.size());
    std::set<std::string> a, b;
    for (const auto& x : lib) a.insert(x.to_string());
    for (const auto& x : ref) b.insert(oracle::label(x));
    EXPECT_EQ(a, b);
    EXPECT_EQ(lib.front().to_string(), n ? std::to_string(n) + "|-" : "-|-");
    EXPECT_EQ(lib.back().second, P(std::vector<int>(static_cast<std::size_t>(n), 1)));
  }
}
