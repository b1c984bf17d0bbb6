#include "bnorder/biporders.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bnorder {

std::vector<std::string> labels_of(const std::vector<Bipartition>& bps) {
  std::vector<std::string> out;
  out.reserve(bps.size());
  for (const auto& bp : bps) out.push_back(bp.to_string());
  return out;
}

namespace {

void require_same_size(const Bipartition& x, const Bipartition& y, const char* what) {
  if (x.size() != y.size())
    throw std::invalid_argument(std::string(what) + ": " + x.to_string() + " and " +
                                y.to_string() + " have different sizes");
}

void require_symbols(const WeightParams& params, const char* what) {
  if (!params.has_symbols()) throw std::domain_error(std::string(what) + " needs a > 0");
}

// Vector difference q - p after zero padding both to a common length.
std::vector<int> part_difference(const Partition& p, const Partition& q) {
  const int len = std::max(p.length(), q.length());
  auto pp = p.padded(len), qq = q.padded(len);
  for (int i = 0; i < len; ++i) qq[static_cast<std::size_t>(i)] -= pp[static_cast<std::size_t>(i)];
  return qq;
}

// Positions of +1 and -1 entries when the difference is exactly e_plus - e_minus
// (either may be absent if the counts say so); nullopt for any other shape.
struct UnitMoves {
  std::vector<int> plus;
  std::vector<int> minus;
};
std::optional<UnitMoves> unit_moves(const std::vector<int>& diff) {
  UnitMoves m;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] == 1)
      m.plus.push_back(static_cast<int>(i));
    else if (diff[i] == -1)
      m.minus.push_back(static_cast<int>(i));
    else if (diff[i] != 0)
      return std::nullopt;
  }
  return m;
}

bool is_raise(const Partition& from, const Partition& to) {
  auto m = unit_moves(part_difference(from, to));
  return m && m->plus.size() == 1 && m->minus.size() == 1 && m->plus[0] < m->minus[0];
}

}  // namespace

bool preceq_ab(const WeightParams& params, const Bipartition& x, const Bipartition& y) {
  require_symbols(params, "preceq_ab");
  require_same_size(x, y, "preceq_ab");
  const int level = std::max(minimal_level(params, x), minimal_level(params, y));
  return mdominance(z_multiset(params, x, level), z_multiset(params, y, level));
}

OrderRelation ab_relation(const WeightParams& params, int n) {
  require_symbols(params, "ab_relation");
  const auto bps = bipartitions_of(n);
  std::vector<SymbolMultiset> symbols;
  for (const auto& bp : bps) symbols.push_back(z_multiset(params, bp, n));
  OrderRelation rel(labels_of(bps), [&](std::size_t i, std::size_t j) {
    return sequence_dominance(symbols[i].entries(), symbols[j].entries());
  });
  rel.metadata() = {{"kind", "ab"}, {"a", std::to_string(params.a())},
                    {"b", std::to_string(params.b())}, {"n", std::to_string(n)}};
  return rel;
}

std::vector<std::vector<Bipartition>> comb_families(const WeightParams& params, int n) {
  require_symbols(params, "comb_families");
  std::vector<std::vector<Bipartition>> out;
  std::map<std::vector<int>, std::size_t> index;
  for (const auto& bp : bipartitions_of(n)) {
    const SymbolMultiset z = z_multiset(params, bp, n);
    std::vector<int> key(z.entries().begin(), z.entries().end());
    auto [it, inserted] = index.emplace(std::move(key), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(bp);
  }
  return out;
}

long long a_ab(const WeightParams& params, const Bipartition& bp) {
  require_symbols(params, "a_ab");
  return a_of_multiset(z_multiset(params, bp));
}

long long omega(const WeightParams& params, const Bipartition& bp) {
  const Partition& lam = bp.first;
  const Partition& mu = bp.second;
  return static_cast<long long>(lam.size() - mu.size()) * params.b() +
         2 *
             (n_invariant(conjugate(lam)) - n_invariant(lam) + n_invariant(conjugate(mu)) -
              n_invariant(mu)) *
             params.a();
}

bool bip_dominance(const Bipartition& x, const Bipartition& y) {
  require_same_size(x, y, "bip_dominance");
  if (!sequence_dominance(x.first.parts(), y.first.parts())) return false;
  const int len = std::max(x.second.length(), y.second.length());
  long long sx = x.first.size(), sy = y.first.size();
  for (int d = 0; d < len; ++d) {
    sx += x.second[static_cast<std::size_t>(d)];
    sy += y.second[static_cast<std::size_t>(d)];
    if (sx > sy) return false;
  }
  return x.first.size() <= y.first.size();
}

OrderRelation dominance_relation(int n) {
  const auto bps = bipartitions_of(n);
  OrderRelation rel(labels_of(bps),
                    [&](std::size_t i, std::size_t j) { return bip_dominance(bps[i], bps[j]); });
  rel.metadata() = {{"kind", "dominance"}, {"n", std::to_string(n)}};
  return rel;
}

std::string to_string(Adjacency adj) {
  switch (adj) {
    case Adjacency::equal: return "equal";
    case Adjacency::case_a: return "case_a";
    case Adjacency::case_b: return "case_b";
    case Adjacency::case_c: return "case_c";
    case Adjacency::not_adjacent: return "not_adjacent";
  }
  return "?";
}

Adjacency adjacency_classify(const Bipartition& x, const Bipartition& y) {
  if (!bip_dominance(x, y))
    throw std::invalid_argument("adjacency_classify: " + x.to_string() + " is not dominated by " +
                                y.to_string());
  if (x == y) return Adjacency::equal;
  for (const auto& z : bipartitions_of(x.size()))
    if (z != x && z != y && bip_dominance(x, z) && bip_dominance(z, y))
      return Adjacency::not_adjacent;

  if (x.second == y.second && is_raise(x.first, y.first)) return Adjacency::case_a;
  if (x.first == y.first && is_raise(x.second, y.second)) return Adjacency::case_b;
  if (x.first.size() < y.first.size()) {
    auto lm = unit_moves(part_difference(x.first, y.first));
    auto mm = unit_moves(part_difference(x.second, y.second));
    if (lm && mm && lm->plus.size() == 1 && lm->minus.empty() && mm->plus.empty() &&
        mm->minus.size() == 1)
      return Adjacency::case_c;
  }
  throw std::logic_error("adjacent pair " + x.to_string() + " <| " + y.to_string() +
                         " fits none of the three adjacency shapes");
}

bool is_special(SpecialKind kind, const Bipartition& bp) {
  const int level = std::max(bp.size(), 1);
  if (kind == SpecialKind::equal_parameter) {
    const auto lam = bp.first.padded(level + 1);
    const auto mu = bp.second.padded(level);
    for (std::size_t i = 0; i < static_cast<std::size_t>(level); ++i)
      if (!(lam[i] + 1 >= mu[i] && mu[i] >= lam[i + 1])) return false;
    return true;
  }
  const auto lam = bp.first.padded(level);
  const auto mu = bp.second.padded(level);
  const std::size_t last = static_cast<std::size_t>(level - 1);
  if (lam[last] < mu[last]) return false;
  for (std::size_t i = 0; i < last; ++i)
    if (!(lam[i] >= mu[i] && mu[i] >= lam[i + 1] - 1)) return false;
  return true;
}

Partition pi_map(const WeightParams& params, const Bipartition& bp) {
  if (params.a() != 2 || params.b() % 2 != 1)
    throw std::invalid_argument("pi_map needs a = 2 and b odd, got " + params.to_string());
  const SymbolMultiset z = z_multiset(params, bp);
  return partition_from_beta(BetaSet(std::vector<int>(z.entries().begin(), z.entries().end())));
}

OrderRelation pi_relation(const WeightParams& params, int n) {
  const auto bps = bipartitions_of(n);
  std::vector<Partition> images;
  for (const auto& bp : bps) images.push_back(pi_map(params, bp));
  OrderRelation rel(labels_of(bps), [&](std::size_t i, std::size_t j) {
    return dominance(images[i], images[j]);
  });
  rel.metadata() = {{"kind", "pi"}, {"a", std::to_string(params.a())},
                    {"b", std::to_string(params.b())}, {"n", std::to_string(n)}};
  return rel;
}

TildeSequences tilde_sequences(const Bipartition& bp, int level) {
  const WeightParams equal(1, 1);
  if (level < minimal_level(equal, bp))
    throw std::invalid_argument("tilde_sequences: level too small for " + bp.to_string());
  const auto lam = bp.first.padded(level + 1);
  const auto mu = bp.second.padded(level);
  const std::size_t len = static_cast<std::size_t>(2 * level + 1);
  TildeSequences out;
  out.z.resize(len);
  for (int i = 1; i <= level + 1; ++i)
    out.z[static_cast<std::size_t>(2 * i - 2)] = lam[static_cast<std::size_t>(i - 1)] + level + 1 - i;
  for (int i = 1; i <= level; ++i)
    out.z[static_cast<std::size_t>(2 * i - 1)] = mu[static_cast<std::size_t>(i - 1)] + level - i;
  if (!std::is_sorted(out.z.rbegin(), out.z.rend()))
    throw std::invalid_argument("tilde_sequences: " + bp.to_string() + " is not (1,1)-special");

  // 1-based position p = k + 1
  out.tilde.resize(len);
  for (std::size_t k = 0; k < len; ++k) {
    const int z = out.z[k];
    const bool odd = k % 2 == 0;
    if (odd)
      out.tilde[k] = (k == 0 || out.z[k - 1] > z) ? 2 * z + 1 : 2 * z;
    else
      out.tilde[k] = z > out.z[k + 1] ? 2 * z : 2 * z + 1;
  }
  return out;
}

SymbolMultiset tilde_transform(const Bipartition& bp, int level) {
  if (!is_special(SpecialKind::equal_parameter, bp))
    throw std::invalid_argument("tilde_transform: " + bp.to_string() + " is not (1,1)-special");
  return SymbolMultiset(WeightParams(2, 3), bp.size(), level, tilde_sequences(bp, level).tilde);
}

}  // namespace bnorder
