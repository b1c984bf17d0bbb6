#include "bnorder/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bnorder {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("partition parts must be non-negative");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  if (text == "-" || text.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view tok = text.substr(pos, dot - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value <= 0)
      throw std::invalid_argument("bad partition syntax: '" + std::string(text) + "'");
    parts.push_back(value);
    pos = dot + 1;
  }
  return Partition(std::move(parts));
}

std::vector<int> Partition::padded(int len) const {
  if (len < length())
    throw std::invalid_argument("cannot pad " + to_string() + " to " + std::to_string(len) +
                                " parts");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(len), 0);
  return out;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool sequence_dominance(std::span<const int> lhs, std::span<const int> rhs) {
  const std::size_t len = std::max(lhs.size(), rhs.size());
  long long sl = 0, sr = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sl += i < lhs.size() ? lhs[i] : 0;
    sr += i < rhs.size() ? rhs[i] : 0;
    if (sl > sr) return false;
  }
  return true;
}

bool dominance(const Partition& p, const Partition& q, Sizes sizes) {
  if (sizes == Sizes::must_match && p.size() != q.size())
    throw std::invalid_argument("dominance: partitions " + p.to_string() + " and " +
                                q.to_string() + " have different sizes");
  return sequence_dominance(p.parts(), q.parts());
}

long long n_invariant(const Partition& p) {
  long long s = 0;
  for (int i = 0; i < p.length(); ++i) s += static_cast<long long>(i) * p[i];
  return s;
}

Partition add_part(const Partition& p, int l) {
  if (l < 0) throw std::invalid_argument("add_part: negative part");
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  if (l > 0) parts.insert(std::upper_bound(parts.begin(), parts.end(), l, std::greater<>()), l);
  return Partition(std::move(parts));
}

BetaSet::BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
  if (!entries_.empty() && entries_.back() < 0)
    throw std::invalid_argument("beta-set entries must be non-negative");
  if (std::adjacent_find(entries_.begin(), entries_.end()) != entries_.end())
    throw std::invalid_argument("beta-set entries must be distinct");
}

long long BetaSet::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool BetaSet::contains(int x) const {
  return std::binary_search(entries_.begin(), entries_.end(), x, std::greater<>());
}

BetaSet beta_set(const Partition& p, int m) {
  if (m < p.length())
    throw std::invalid_argument("beta_set: m=" + std::to_string(m) + " smaller than length of " +
                                p.to_string());
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out.push_back(p[static_cast<std::size_t>(i)] + m - 1 - i);
  return BetaSet(std::move(out));
}

Partition partition_from_beta(const BetaSet& x) {
  const int m = x.count();
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) parts.push_back(x.entries()[static_cast<std::size_t>(i)] - (m - 1 - i));
  return Partition(std::move(parts));
}

BetaSet hat_complement(const BetaSet& x, int m_out) {
  const int top = x.count() + m_out - 1;
  if (m_out < 0 || x.max() > top)
    throw std::invalid_argument("hat_complement: entries exceed #x + m_out - 1");
  std::vector<bool> removed(static_cast<std::size_t>(top + 1), false);
  for (int e : x.entries()) removed[static_cast<std::size_t>(top - e)] = true;
  std::vector<int> out;
  for (int v = top; v >= 0; --v)
    if (!removed[static_cast<std::size_t>(v)]) out.push_back(v);
  return BetaSet(std::move(out));
}

bool dominance(const BetaSet& x, const BetaSet& y) {
  if (x.count() != y.count() || x.sum() != y.sum())
    throw std::invalid_argument("beta-set dominance needs equal count and equal sum");
  return sequence_dominance(x.entries(), y.entries());
}

}  // namespace bnorder
