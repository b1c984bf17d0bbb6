#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bnorder/partition.hpp"

namespace bnorder {

/// An ordered pair (λ, μ) of partitions; labels E^(λ,μ) in Irr(W_n).
struct Bipartition {
  Partition first;
  Partition second;

  int size() const { return first.size() + second.size(); }

  /// "λ|μ" with the partition syntax of Partition::parse, e.g. "4.3.1.1|3.2".
  static Bipartition parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend std::strong_ordering operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// All bipartitions of n. Ordered by decreasing |λ|, then partitions_of
/// order on each component; the unit (n|-) comes first and the sign
/// (-|1^n) last.
std::vector<Bipartition> bipartitions_of(int n);

}  // namespace bnorder
