#include "bnorder/order_relation.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnorder {

OrderRelation::OrderRelation(std::vector<std::string> ground,
                             const std::function<bool(std::size_t, std::size_t)>& holds)
    : ground_(std::move(ground)), matrix_(ground_.size() * ground_.size(), 0) {
  const std::size_t n = ground_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) matrix_[i * n + j] = (i == j || holds(i, j)) ? 1 : 0;
  close();
}

OrderRelation OrderRelation::from_pairs(std::vector<std::string> ground,
                                        const std::vector<Pair>& pairs) {
  OrderRelation rel(std::move(ground), [](std::size_t, std::size_t) { return false; });
  const std::size_t n = rel.size();
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw std::out_of_range("OrderRelation: pair index out of range");
    rel.matrix_[i * n + j] = 1;
  }
  rel.close();
  return rel;
}

void OrderRelation::close() {
  // Warshall
  const std::size_t n = ground_.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!matrix_[i * n + k]) continue;
      std::uint8_t* row_i = &matrix_[i * n];
      const std::uint8_t* row_k = &matrix_[k * n];
      for (std::size_t j = 0; j < n; ++j) row_i[j] |= row_k[j];
    }
}

std::optional<std::size_t> OrderRelation::index_of(std::string_view label) const {
  auto it = std::find(ground_.begin(), ground_.end(), label);
  if (it == ground_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ground_.begin());
}

bool OrderRelation::holds(std::string_view lhs, std::string_view rhs) const {
  auto i = index_of(lhs), j = index_of(rhs);
  if (!i || !j) throw std::out_of_range("OrderRelation: unknown label");
  return holds(*i, *j);
}

std::vector<OrderRelation::Pair> OrderRelation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (holds(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<OrderRelation::Pair> OrderRelation::strict_pairs() const {
  std::vector<Pair> out;
  for (auto p : pairs())
    if (p.first != p.second) out.push_back(p);
  return out;
}

std::vector<std::vector<std::size_t>> OrderRelation::classes() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < size(); ++j)
      if (!seen[j] && holds(i, j) && holds(j, i)) {
        seen[j] = true;
        cls.push_back(j);
      }
    out.push_back(std::move(cls));
  }
  return out;
}

bool OrderRelation::is_partial_order() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (holds(i, j) && holds(j, i)) return false;
  return true;
}

bool OrderRelation::subset_of(const OrderRelation& other) const {
  if (ground_ != other.ground_)
    throw std::invalid_argument("OrderRelation: comparing relations on different ground sets");
  for (std::size_t k = 0; k < matrix_.size(); ++k)
    if (matrix_[k] && !other.matrix_[k]) return false;
  return true;
}

HasseDiagram hasse_diagram(const OrderRelation& rel) {
  HasseDiagram h;
  h.classes = rel.classes();
  const std::size_t m = h.classes.size();
  auto below = [&](std::size_t c, std::size_t d) {
    return c != d && rel.holds(h.classes[c].front(), h.classes[d].front());
  };
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t d = 0; d < m; ++d) {
      if (!below(c, d)) continue;
      bool covered = true;
      for (std::size_t e = 0; e < m && covered; ++e)
        if (below(c, e) && below(e, d)) covered = false;
      if (covered) h.covers.emplace_back(c, d);
    }
  return h;
}

std::vector<OrderRelation::Pair> relation_difference(const OrderRelation& lhs,
                                                     const OrderRelation& rhs) {
  if (lhs.ground() != rhs.ground())
    throw std::invalid_argument("relation_difference: different ground sets");
  std::vector<OrderRelation::Pair> out;
  for (auto [i, j] : lhs.pairs())
    if (!rhs.holds(i, j)) out.emplace_back(i, j);
  return out;
}

}  // namespace bnorder
