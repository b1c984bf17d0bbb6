#include "bnorder/type_dn.hpp"

#include <stdexcept>

#include "bnorder/biporders.hpp"

namespace bnorder {

namespace {

const WeightParams kTypeD(1, 0);

Bipartition swapped(const Bipartition& bp) { return {bp.second, bp.first}; }

}  // namespace

IrrLabelDn IrrLabelDn::unsplit(const Bipartition& bp) {
  if (bp.first == bp.second)
    throw std::invalid_argument("[" + bp.to_string() + "] splits; give a sign");
  const Bipartition other = swapped(bp);
  if (is_special(SpecialKind::type_d, bp)) return {bp, DnSign::none};
  if (is_special(SpecialKind::type_d, other)) return {other, DnSign::none};
  return {std::min(bp, other), DnSign::none};
}

IrrLabelDn IrrLabelDn::split(const Partition& half, DnSign sign) {
  if (sign == DnSign::none) throw std::invalid_argument("split label needs a sign");
  return {Bipartition{half, half}, sign};
}

IrrLabelDn IrrLabelDn::parse(std::string_view text) {
  if (text.empty() || text.front() != '[')
    throw std::invalid_argument("bad D_n label '" + std::string(text) + "'");
  const auto close = text.find(']');
  if (close == std::string_view::npos)
    throw std::invalid_argument("bad D_n label '" + std::string(text) + "'");
  const Bipartition bp = Bipartition::parse(text.substr(1, close - 1));
  const std::string_view tail = text.substr(close + 1);
  if (tail.empty()) return unsplit(bp);
  if (bp.first != bp.second || tail.size() != 1 || (tail[0] != '+' && tail[0] != '-'))
    throw std::invalid_argument("bad D_n label '" + std::string(text) + "'");
  return split(bp.first, tail[0] == '+' ? DnSign::plus : DnSign::minus);
}

std::string IrrLabelDn::to_string() const {
  std::string out = "[" + bp_.to_string() + "]";
  if (sign_ == DnSign::plus) out += "+";
  if (sign_ == DnSign::minus) out += "-";
  return out;
}

std::vector<IrrLabelDn> dn_labels(int n) {
  if (n < 2) throw std::invalid_argument("dn_labels: n must be at least 2");
  std::vector<IrrLabelDn> out;
  for (const auto& bp : bipartitions_of(n)) {
    if (bp.first == bp.second) {
      out.push_back(IrrLabelDn::split(bp.first, DnSign::plus));
      out.push_back(IrrLabelDn::split(bp.first, DnSign::minus));
      continue;
    }
    IrrLabelDn label = IrrLabelDn::unsplit(bp);
    if (label.bipartition() == bp) out.push_back(std::move(label));
  }
  return out;
}

bool dn_special(const IrrLabelDn& label) {
  return is_special(SpecialKind::type_d, label.bipartition());
}

IrrLabelDn dn_special_representative(const IrrLabelDn& label) {
  if (dn_special(label)) return label;
  const Bipartition& bp = label.bipartition();
  const int n = bp.size();
  const SymbolMultiset z = z_multiset(kTypeD, bp, n);
  for (const auto& other : bipartitions_of(n))
    if (is_special(SpecialKind::type_d, other) && z_multiset(kTypeD, other, n) == z) {
      if (other.first == other.second)
        throw std::logic_error("family of " + bp.to_string() + " has a split special member");
      return IrrLabelDn::unsplit(other);
    }
  throw std::logic_error("no (1,0)-special bipartition in the family of " + bp.to_string());
}

bool dn_preceq(const IrrLabelDn& lhs, const IrrLabelDn& rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("dn_preceq: " + lhs.to_string() + " and " + rhs.to_string() +
                                " have different ranks");
  const IrrLabelDn x = dn_special_representative(lhs);
  const IrrLabelDn y = dn_special_representative(rhs);
  if (x.is_split() && y.is_split() && x.bipartition() == y.bipartition()) return x == y;
  return preceq_ab(kTypeD, x.bipartition(), y.bipartition());
}

OrderRelation dn_relation(int n, bool special_only) {
  std::vector<IrrLabelDn> labels;
  for (auto& label : dn_labels(n))
    if (!special_only || dn_special(label)) labels.push_back(std::move(label));
  std::vector<std::string> ground;
  for (const auto& label : labels) ground.push_back(label.to_string());
  OrderRelation rel(std::move(ground), [&](std::size_t i, std::size_t j) {
    return dn_preceq(labels[i], labels[j]);
  });
  rel.metadata() = {{"kind", "dn"}, {"n", std::to_string(n)}};
  return rel;
}

}  // namespace bnorder
