#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bnorder/bipartition.hpp"
#include "bnorder/order_relation.hpp"

namespace bnorder {

enum class DnSign { none, plus, minus };

/// A label of Irr(D_n): the restriction [λ,μ] = [μ,λ] of E^(λ,μ) when λ ≠ μ,
/// or one of the two halves [λ,±] of the restriction of E^(λ,λ).
class IrrLabelDn {
 public:
  /// [λ,μ] for λ ≠ μ. The stored orientation is the (1,0)-special one if
  /// there is one, otherwise the smaller of the two.
  static IrrLabelDn unsplit(const Bipartition& bp);
  static IrrLabelDn split(const Partition& half, DnSign sign);

  /// "[λ|μ]", "[λ|λ]+" or "[λ|λ]-".
  static IrrLabelDn parse(std::string_view text);

  const Bipartition& bipartition() const { return bp_; }
  DnSign sign() const { return sign_; }
  bool is_split() const { return sign_ != DnSign::none; }
  int size() const { return bp_.size(); }

  std::string to_string() const;

  friend bool operator==(const IrrLabelDn&, const IrrLabelDn&) = default;
  friend auto operator<=>(const IrrLabelDn&, const IrrLabelDn&) = default;

 private:
  IrrLabelDn(Bipartition bp, DnSign sign) : bp_(std::move(bp)), sign_(sign) {}

  Bipartition bp_;
  DnSign sign_;
};

/// Irr(D_n) in bipartitions_of order of the stored orientation; the two
/// halves of a split pair are adjacent, + first. n >= 2.
std::vector<IrrLabelDn> dn_labels(int n);

bool dn_special(const IrrLabelDn& label);

/// The special label in the family of `label` (the label itself if special).
IrrLabelDn dn_special_representative(const IrrLabelDn& label);

/// ≼_L̃ after replacing both labels by their special representatives.
bool dn_preceq(const IrrLabelDn& lhs, const IrrLabelDn& rhs);

OrderRelation dn_relation(int n, bool special_only = false);

}  // namespace bnorder
