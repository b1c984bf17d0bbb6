#include <gtest/gtest.h>

#include <set>

#include "bnorder/biporders.hpp"
#include "bnorder/order_relation.hpp"
#include "oracles.hpp"

using namespace bnorder;

namespace {

Bipartition B(const char* text) { return Bipartition::parse(text); }

oracle::Parts parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }
oracle::Bip to_oracle(const Bipartition& bp) { return {parts_of(bp.first), parts_of(bp.second)}; }

std::vector<int> E(const SymbolMultiset& z) { return {z.entries().begin(), z.entries().end()}; }

}  // namespace

TEST(PreceqAb, Examples) {
  EXPECT_TRUE(preceq_ab(WeightParams(3, 1), B("1.1|1"), B("2.1|-")));
  EXPECT_TRUE(preceq_ab(WeightParams(2, 1), B("-|2.2.1"), B("3.2|-")));
  EXPECT_TRUE(preceq_ab(WeightParams(2, 1), B("3.2|-"), B("3.2|-")));
  EXPECT_THROW(preceq_ab(WeightParams(0, 1), B("1|-"), B("-|1")), std::domain_error);
  EXPECT_THROW(preceq_ab(WeightParams(1, 1), B("1|-"), B("-|2")), std::invalid_argument);
}

TEST(PreceqAb, IndependentOfLevel) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int n = 0; n <= 4; ++n) {
        const WeightParams p(a, b);
        const auto bps = bipartitions_of(n);
        for (const auto& x : bps)
          for (const auto& y : bps) {
            const int level = n + 3;
            const bool expected = oracle::leq(oracle::symbol(a, b, to_oracle(x), level),
                                              oracle::symbol(a, b, to_oracle(y), level));
            EXPECT_EQ(preceq_ab(p, x, y), expected) << x.to_string() << " " << y.to_string();
          }
      }
}

TEST(PreceqAb, RelationMetadataAndShape) {
  const OrderRelation rel = ab_relation(WeightParams(2, 3), 2);
  EXPECT_EQ(rel.size(), 5u);
  EXPECT_EQ(rel.metadata().at("kind"), "ab");
  EXPECT_TRUE(rel.is_partial_order());
  EXPECT_EQ(rel.strict_pairs().size(), 10u);  // a 5-chain
}

TEST(Families, Examples) {
  const auto f = comb_families(WeightParams(1, 4), 5);
  std::size_t big = 0;
  for (const auto& family : f) {
    if (family.size() == 1) continue;
    ++big;
    std::set<std::string> labels;
    for (const auto& bp : family) labels.insert(bp.to_string());
    EXPECT_EQ(labels, (std::set<std::string>{"-|5", "1|4", "1.1|3", "1.1.1|2", "1.1.1.1|1",
                                             "1.1.1.1.1|-"}));
  }
  EXPECT_EQ(big, 1u);
  EXPECT_EQ(comb_families(WeightParams(2, 3), 2).size(), 5u);
  EXPECT_EQ(comb_families(WeightParams(3, 2), 1).size(), 2u);
  for (int n = 0; n <= 6; ++n)
    EXPECT_EQ(comb_families(WeightParams(3, 1), n).size(), bipartitions_of(n).size());
}

TEST(AFunction, Examples) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int n = 0; n <= 6; ++n) {
        const WeightParams p(a, b);
        const auto bps = bipartitions_of(n);
        EXPECT_EQ(a_ab(p, bps.front()), 0);
        const long long w0 = static_cast<long long>(n) * b + static_cast<long long>(n) * (n - 1) * a;
        EXPECT_EQ(a_ab(p, bps.back()), w0);
        EXPECT_EQ(omega(p, bps.front()), w0);
        EXPECT_EQ(omega(p, bps.back()), -w0);
      }
  EXPECT_THROW(a_ab(WeightParams(0, 1), B("1|-")), std::domain_error);
}

TEST(AFunction, AsymptoticClosedForm) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, n}, {2, 2 * n - 1}, {1, n + 3}}) {
      const WeightParams p(a, b);
      for (const auto& bp : bipartitions_of(n)) {
        const auto mu = parts_of(bp.second);
        const long long expected =
            (oracle::n_of(parts_of(bp.first)) + 2 * oracle::n_of(mu) -
             oracle::n_of(oracle::conjugate(mu))) * a +
            static_cast<long long>(oracle::sum(mu)) * b;
        EXPECT_EQ(a_ab(p, bp), expected) << bp.to_string();
      }
    }
}

TEST(Omega, DifferenceOfAValuesUnderSignTwist) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int n = 0; n <= 6; ++n)
        for (const auto& bp : bipartitions_of(n)) {
          const WeightParams p(a, b);
          const oracle::Bip s = oracle::sgn(to_oracle(bp));
          EXPECT_EQ(omega(p, bp), oracle::a_value(a, b, s) - oracle::a_value(a, b, to_oracle(bp)));
        }
  EXPECT_EQ(omega(WeightParams(2, 5), B("2.1|2.1")), 0);
  EXPECT_EQ(omega(WeightParams(0, 3), B("2|1")), 3);
}

TEST(BipDominance, MatchesDefinitionOracle) {
  const char* chain[] = {"-|1.1", "-|2", "1|1", "1.1|-", "2|-"};
  for (int i = 0; i + 1 < 5; ++i) EXPECT_TRUE(bip_dominance(B(chain[i]), B(chain[i + 1])));
  for (int n = 0; n <= 6; ++n) {
    const auto bps = bipartitions_of(n);
    for (const auto& x : bps)
      for (const auto& y : bps) {
        const bool d = bip_dominance(x, y);
        EXPECT_EQ(d, oracle::djm(to_oracle(x), to_oracle(y)));
        EXPECT_EQ(d, oracle::leq(parts_of(x.first), parts_of(y.first)) &&
                         oracle::leq(oracle::conjugate(parts_of(y.second)),
                                     oracle::conjugate(parts_of(x.second))));
      }
  }
  EXPECT_THROW(bip_dominance(B("1|-"), B("2|-")), std::invalid_argument);
  EXPECT_TRUE(dominance_relation(5).is_partial_order());
}

TEST(Adjacency, Examples) {
  EXPECT_EQ(adjacency_classify(B("1|1"), B("1.1|-")), Adjacency::case_c);
  EXPECT_EQ(adjacency_classify(B("-|1.1"), B("-|2")), Adjacency::case_b);
  EXPECT_EQ(adjacency_classify(B("1.1|-"), B("2|-")), Adjacency::case_a);
  EXPECT_EQ(adjacency_classify(B("2|1"), B("2|1")), Adjacency::equal);
  EXPECT_EQ(adjacency_classify(B("-|1.1"), B("2|-")), Adjacency::not_adjacent);
  EXPECT_THROW(adjacency_classify(B("2|-"), B("-|1.1")), std::invalid_argument);
}

TEST(Adjacency, CoversOfTheOracleOrderHaveOneOfThreeShapes) {
  for (int n = 1; n <= 6; ++n) {
    const auto bps = bipartitions_of(n);
    for (const auto& x : bps)
      for (const auto& y : bps) {
        if (x == y || !oracle::djm(to_oracle(x), to_oracle(y))) continue;
        bool cover = true;
        for (const auto& z : bps)
          if (z != x && z != y && oracle::djm(to_oracle(x), to_oracle(z)) &&
              oracle::djm(to_oracle(z), to_oracle(y)))
            cover = false;
        const Adjacency adj = adjacency_classify(x, y);
        EXPECT_EQ(adj != Adjacency::not_adjacent, cover) << x.to_string() << " " << y.to_string();
      }
  }
}

TEST(Special, Examples) {
  EXPECT_TRUE(is_special(SpecialKind::equal_parameter, B("1|1")));
  for (int n = 2; n <= 6; ++n) {
    const Bipartition bp{Partition(), Partition(std::vector<int>{n})};
    EXPECT_FALSE(is_special(SpecialKind::equal_parameter, bp));
  }
  EXPECT_TRUE(is_special(SpecialKind::equal_parameter, B("-|-")));
  EXPECT_TRUE(is_special(SpecialKind::type_d, B("-|-")));
  EXPECT_TRUE(is_special(SpecialKind::type_d, B("3|-")));
}

TEST(PiMap, Examples) {
  EXPECT_EQ(pi_map(WeightParams(2, 3), B("-|1.1")), Partition(std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(pi_map(WeightParams(2, 3), B("2|-")), Partition(std::vector<int>{5}));
  EXPECT_EQ(pi_map(WeightParams(2, 1), B("-|1.1")).size(), 4);
  for (int b : {1, 3, 5})
    for (int n = 0; n <= 5; ++n)
      for (const auto& bp : bipartitions_of(n)) {
        const int r = b / 2;
        EXPECT_EQ(pi_map(WeightParams(2, b), bp).size(), 2 * n + r * (r + 1) / 2);
      }
  EXPECT_THROW(pi_map(WeightParams(2, 2), B("1|-")), std::invalid_argument);
  EXPECT_EQ(pi_relation(WeightParams(2, 3), 4), ab_relation(WeightParams(2, 3), 4));
}

TEST(Tilde, DoublingRuleReproducesTheDirectSymbol) {
  EXPECT_EQ(E(tilde_transform(B("1|1"), 1)), (std::vector<int>{5, 2, 1}));
  EXPECT_EQ(tilde_sequences(B("1|1"), 1).z, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(E(tilde_transform(B("-|-"), 1)), E(z_multiset(WeightParams(2, 3), B("-|-"), 1)));
  for (int n = 0; n <= 6; ++n)
    for (const auto& bp : bipartitions_of(n)) {
      if (!is_special(SpecialKind::equal_parameter, bp)) {
        EXPECT_THROW(tilde_transform(bp, std::max(n, 1)), std::invalid_argument);
        continue;
      }
      for (int level = std::max(n, 1); level <= n + 2; ++level)
        EXPECT_EQ(E(tilde_transform(bp, level)),
                  oracle::symbol(2, 3, to_oracle(bp), level)) << bp.to_string();
    }
}

TEST(OrderRelation, ClosureClassesAndHasse) {
  const OrderRelation rel = OrderRelation::from_pairs({"x", "y", "z", "w"}, {{0, 1}, {1, 2}, {2, 1}, {2, 3}});
  EXPECT_TRUE(rel.holds(0, 3));
  EXPECT_TRUE(rel.holds(3, 3));
  EXPECT_FALSE(rel.holds(3, 0));
  EXPECT_FALSE(rel.is_partial_order());
  EXPECT_EQ(rel.classes(), (std::vector<std::vector<std::size_t>>{{0}, {1, 2}, {3}}));
  const HasseDiagram h = hasse_diagram(rel);
  EXPECT_EQ(h.covers, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(rel.holds("x", "w"));
  EXPECT_FALSE(rel.index_of("nope").has_value());
  const OrderRelation total = OrderRelation::from_pairs({"x", "y", "z", "w"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(rel.subset_of(total));
  EXPECT_FALSE(total.subset_of(rel));
  EXPECT_EQ(relation_difference(rel, total).size(), 0u);
}
