#include <gtest/gtest.h>

#include <set>

#include "bnorder/biporders.hpp"
#include "bnorder/rep_bn.hpp"
#include "bnorder/type_dn.hpp"

using namespace bnorder;

namespace {

Bipartition B(const char* text) { return Bipartition::parse(text); }

}  // namespace

TEST(TypeD, LabelsAndParsing) {
  const auto two = dn_labels(2);
  EXPECT_EQ(two.size(), 4u);
  std::set<std::string> text;
  for (const auto& l : two) text.insert(l.to_string());
  EXPECT_TRUE(text.count("[1|1]+"));
  EXPECT_TRUE(text.count("[1|1]-"));

  for (const auto& l : dn_labels(3)) EXPECT_FALSE(l.is_split());

  for (int n = 2; n <= 8; ++n) {
    std::size_t bips = bipartitions_of(n).size(), equal = 0;
    for (const auto& bp : bipartitions_of(n)) equal += bp.first == bp.second;
    EXPECT_EQ(dn_labels(n).size(), (bips - equal) / 2 + 2 * equal);
  }

  EXPECT_EQ(IrrLabelDn::parse("[2|1]"), IrrLabelDn::parse("[1|2]"));
  EXPECT_EQ(IrrLabelDn::parse("[1|1]+").sign(), DnSign::plus);
  EXPECT_EQ(IrrLabelDn::parse("[1|1]-").to_string(), "[1|1]-");
  EXPECT_THROW(IrrLabelDn::parse("[1|1]"), std::invalid_argument);
  EXPECT_THROW(IrrLabelDn::parse("[2|1]+"), std::invalid_argument);
  EXPECT_THROW(IrrLabelDn::parse("2|1"), std::invalid_argument);
  EXPECT_THROW(dn_labels(1), std::invalid_argument);
}

TEST(TypeD, Speciality) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_TRUE(dn_special(IrrLabelDn::unsplit({Partition(std::vector<int>{n}), Partition()})));
    for (const auto& bp : bipartitions_of(n)) {
      if (bp.first == bp.second) {
        EXPECT_EQ(dn_special(IrrLabelDn::split(bp.first, DnSign::plus)),
                  dn_special(IrrLabelDn::split(bp.first, DnSign::minus)));
        continue;
      }
      const Bipartition other{bp.second, bp.first};
      EXPECT_FALSE(is_special(SpecialKind::type_d, bp) && is_special(SpecialKind::type_d, other));
    }
  }
}

TEST(TypeD, PreorderOnSpecialLabels) {
  const IrrLabelDn plus = IrrLabelDn::split(Partition(std::vector<int>{1}), DnSign::plus);
  const IrrLabelDn minus = IrrLabelDn::split(Partition(std::vector<int>{1}), DnSign::minus);
  EXPECT_FALSE(dn_preceq(plus, minus));
  EXPECT_FALSE(dn_preceq(minus, plus));
  EXPECT_TRUE(dn_preceq(plus, plus));

  for (int n = 2; n <= 6; ++n) {
    const OrderRelation special = dn_relation(n, true);
    EXPECT_TRUE(special.is_partial_order()) << n;
  }

  const WeightParams d(1, 0);
  for (const auto& x : dn_labels(4))
    for (const auto& y : dn_labels(4)) {
      if (!dn_special(x) || !dn_special(y) || x.is_split() || y.is_split()) continue;
      EXPECT_EQ(dn_preceq(x, y), preceq_ab(d, x.bipartition(), y.bipartition()));
    }
}

TEST(TypeD, NonSpecialLabelsUseTheirFamilyRepresentative) {
  const WeightParams d(1, 0);
  for (int n = 2; n <= 6; ++n)
    for (const auto& label : dn_labels(n)) {
      const IrrLabelDn rep = dn_special_representative(label);
      EXPECT_TRUE(dn_special(rep));
      EXPECT_TRUE(equivalent(z_multiset(d, rep.bipartition()), z_multiset(d, label.bipartition())));
      for (const auto& other : dn_labels(n))
        EXPECT_EQ(dn_preceq(label, other), dn_preceq(rep, dn_special_representative(other)));
    }
}

TEST(TypeD, SignTwistIsWellDefinedOnLabels) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& bp : bipartitions_of(n)) {
      if (bp.first == bp.second) continue;
      const Bipartition other{bp.second, bp.first};
      EXPECT_EQ(IrrLabelDn::unsplit(sgn_tensor(bp)), IrrLabelDn::unsplit(sgn_tensor(other)));
    }
  EXPECT_EQ(dn_relation(4).metadata().at("kind"), "dn");
}
