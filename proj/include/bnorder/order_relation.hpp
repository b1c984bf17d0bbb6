#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bnorder {

/// A reflexive and transitive relation on a finite labelled ground set,
/// stored as a dense boolean matrix. Construction always closes the input.
class OrderRelation {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  OrderRelation() = default;
  OrderRelation(std::vector<std::string> ground,
                const std::function<bool(std::size_t, std::size_t)>& holds);
  static OrderRelation from_pairs(std::vector<std::string> ground, const std::vector<Pair>& pairs);

  std::size_t size() const { return ground_.size(); }
  const std::vector<std::string>& ground() const { return ground_; }
  bool holds(std::size_t i, std::size_t j) const { return matrix_[i * ground_.size() + j] != 0; }
  bool holds(std::string_view lhs, std::string_view rhs) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Every related pair (i, j), reflexive ones included, in row-major order.
  std::vector<Pair> pairs() const;
  /// Related pairs with i != j.
  std::vector<Pair> strict_pairs() const;

  /// Equivalence classes of the symmetric part, ordered by first member.
  std::vector<std::vector<std::size_t>> classes() const;
  bool is_partial_order() const;

  /// True when every pair of *this also holds in `other` (same ground set).
  bool subset_of(const OrderRelation& other) const;

  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  /// Ground and pairs only; metadata is descriptive.
  friend bool operator==(const OrderRelation& x, const OrderRelation& y) {
    return x.ground_ == y.ground_ && x.matrix_ == y.matrix_;
  }

 private:
  void close();

  std::vector<std::string> ground_;
  std::vector<std::uint8_t> matrix_;
  std::map<std::string, std::string> metadata_;
};

/// Family quotient of a pre-order together with its covering edges.
struct HasseDiagram {
  std::vector<std::vector<std::size_t>> classes;
  /// (lower, upper) class indices with nothing strictly in between.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Contracts the symmetric classes, then keeps only covering pairs.
HasseDiagram hasse_diagram(const OrderRelation& rel);

/// Pairs (i, j) that are related in `lhs` but not in `rhs` (same ground set).
std::vector<OrderRelation::Pair> relation_difference(const OrderRelation& lhs,
                                                     const OrderRelation& rhs);

}  // namespace bnorder
