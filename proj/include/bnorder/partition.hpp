#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bnorder {

/// A partition stored in canonical form: weakly decreasing positive parts.
///
/// Parts beyond the stored length read as zero, so formulas that quantify
/// over a zero-padded sequence can index freely or call padded().
class Partition {
 public:
  Partition() = default;

  /// Accepts a weakly decreasing sequence of non-negative integers; trailing
  /// zeros are dropped. Throws std::invalid_argument otherwise.
  explicit Partition(std::vector<int> parts);

  /// Sorts arbitrary non-negative parts into canonical order.
  static Partition from_unsorted(std::vector<int> parts);

  /// Parses "4.3.1.1"; the empty partition is "-".
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// Zero-based part access; zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// The parts padded with zeros to exactly `len` entries. Throws if the
  /// partition has more than `len` non-zero parts.
  std::vector<int> padded(int len) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& p, const Partition& q) {
    return p.parts_ <=> q.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n, in reverse lexicographic order starting with (n).
std::vector<Partition> partitions_of(int n);

Partition conjugate(const Partition& p);

enum class Sizes { must_match, may_differ };

/// p ⊴ q: every partial sum of p is at most the corresponding partial sum of
/// q. With Sizes::may_differ the same test is applied to partitions of
/// different sizes (raw partial sums, zero padding).
bool dominance(const Partition& p, const Partition& q, Sizes sizes = Sizes::must_match);

/// Partial-sum dominance of two sequences already sorted decreasingly.
/// Sequences of unequal length are compared after zero padding; the caller
/// is responsible for any equal-sum requirement.
bool sequence_dominance(std::span<const int> lhs, std::span<const int> rhs);

/// n(λ) = Σ (i-1) λ_i.
long long n_invariant(const Partition& p);

/// The partition obtained by inserting `l` as an extra part (no-op for l = 0).
Partition add_part(const Partition& p, int l);

/// A finite set of distinct non-negative integers, stored strictly decreasing.
class BetaSet {
 public:
  BetaSet() = default;
  /// Any order; throws on duplicates or negative entries.
  explicit BetaSet(std::vector<int> entries);

  std::span<const int> entries() const { return entries_; }
  int count() const { return static_cast<int>(entries_.size()); }
  long long sum() const;
  bool contains(int x) const;
  int max() const { return entries_.empty() ? -1 : entries_.front(); }

  friend bool operator==(const BetaSet&, const BetaSet&) = default;
  friend std::strong_ordering operator<=>(const BetaSet& x, const BetaSet& y) {
    return x.entries_ <=> y.entries_;
  }

 private:
  std::vector<int> entries_;
};

/// B_m(λ) = {λ_i + m - i : 1 <= i <= m}. Requires m >= λ.length().
BetaSet beta_set(const Partition& p, int m);

Partition partition_from_beta(const BetaSet& x);

/// {0, ..., #x+m_out-1} minus {#x+m_out-1-e : e in x}. Equals
/// beta_set(conjugate(partition_from_beta(x)), m_out).
BetaSet hat_complement(const BetaSet& x, int m_out);

/// X ⊴ Y for β-sets of equal count and equal sum (decreasing entries
/// compared by partial sums). Throws std::invalid_argument otherwise.
bool dominance(const BetaSet& x, const BetaSet& y);

}  // namespace bnorder
