#include "bnorder/rep_bn.hpp"

#include <cassert>
#include <stdexcept>

#include "bnorder/biporders.hpp"

namespace bnorder {

Bipartition sgn_tensor(const Bipartition& bp) {
  return Bipartition{conjugate(bp.second), conjugate(bp.first)};
}

namespace {

// Every partition obtained from p by adding a vertical strip of size s.
void vertical_strips(const std::vector<int>& padded, std::size_t from, int s,
                     std::vector<int>& current, std::vector<Partition>& out) {
  if (s == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = from; i + static_cast<std::size_t>(s) <= padded.size(); ++i) {
    // row i may grow only if the row above is already longer after the strip
    if (i > 0 && current[i - 1] < padded[i] + 1) continue;
    current[i] += 1;
    vertical_strips(padded, i + 1, s - 1, current, out);
    current[i] -= 1;
  }
}

std::vector<Partition> vertical_strips(const Partition& p, int s) {
  std::vector<int> padded = p.padded(p.length() + s);
  std::vector<int> current = padded;
  std::vector<Partition> out;
  vertical_strips(padded, 0, s, current, out);
  return out;
}

long long binom2(int l) { return static_cast<long long>(l) * (l - 1) / 2; }

}  // namespace

std::set<Bipartition> pieri_constituents(const Bipartition& small, int l) {
  if (l < 1) throw std::invalid_argument("pieri_constituents: l must be at least 1");
  std::set<Bipartition> out;
  for (int s = 0; s <= l; ++s)
    for (const auto& alpha : vertical_strips(small.first, s))
      for (const auto& beta : vertical_strips(small.second, l - s))
        out.insert(Bipartition{alpha, beta});
  return out;
}

long long a_invariant(const WeightParams& params, const Bipartition& bp) {
  if (params.has_symbols()) return a_ab(params, bp);
  return static_cast<long long>(params.b()) * bp.second.size();
}

bool leads_to(const WeightParams& params, const Bipartition& small, int l,
              const Bipartition& big) {
  if (!params.has_symbols()) throw std::domain_error("leads_to needs a > 0");
  if (small.size() + l != big.size())
    throw std::invalid_argument("leads_to: " + small.to_string() + " and " + big.to_string() +
                                " do not differ in size by " + std::to_string(l));
  if (!pieri_constituents(small, l).contains(big)) return false;
  if (a_ab(params, small) + binom2(l) * params.a() != a_ab(params, big)) return false;
#ifndef NDEBUG
  const int level = std::max(minimal_level(params, small), minimal_level(params, big));
  assert(hat_increase(z_multiset(params, small, level), l) == z_multiset(params, big, level));
#endif
  return true;
}

std::string to_string(InductionStep step) { return step == InductionStep::I ? "I" : "II"; }

bool PreceqLTable::holds(const Bipartition& x, const Bipartition& y) const {
  if (x.size() != y.size())
    throw std::invalid_argument("preceq_L: " + x.to_string() + " and " + y.to_string() +
                                " have different sizes");
  if (x.size() > max_rank())
    throw std::out_of_range("preceq_L: table only reaches rank " + std::to_string(max_rank()));
  const auto& index = index_.at(static_cast<std::size_t>(x.size()));
  return relation(x.size()).holds(index.at(x), index.at(y));
}

class PreceqLBuilder {
 public:
  static void extend(PreceqLTable& table, int n) {
    while (table.max_rank() < n) add_rank(table);
  }

 private:
  static void add_rank(PreceqLTable& t) {
    const int n = t.max_rank() + 1;
    auto labels = bipartitions_of(n);
    std::map<Bipartition, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

    std::vector<OrderRelation::Pair> pairs;
    std::vector<ElementaryPair> provenance;
    const WeightParams& params = t.params_;
    if (!params.has_symbols()) {
      for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
          if (params.b() == 0 || labels[i].second.size() >= labels[j].second.size())
            pairs.emplace_back(i, j);
    } else {
      std::vector<long long> a_big;
      for (const auto& bp : labels) a_big.push_back(a_ab(params, bp));
      std::set<OrderRelation::Pair> seen;
      auto record = [&](std::size_t e, std::size_t e2, ElementaryPair&& why) {
        if (e == e2 || !seen.emplace(e, e2).second) return;
        pairs.emplace_back(e, e2);
        provenance.push_back(std::move(why));
      };

      for (int k = 0; k < n; ++k) {
        const int l = n - k;
        const auto& small = t.labels(k);
        const OrderRelation& lower = t.relation(k);
        std::vector<std::vector<std::size_t>> up(small.size()), leads(small.size());
        for (std::size_t m = 0; m < small.size(); ++m) {
          const long long target = a_ab(params, small[m]) + binom2(l) * params.a();
          for (const auto& bp : pieri_constituents(small[m], l)) {
            const std::size_t e = index.at(bp);
            up[m].push_back(e);
            if (a_big[e] == target) leads[m].push_back(e);
          }
        }
        for (auto [m, m2] : lower.pairs()) {
          for (std::size_t e : up[m])
            for (std::size_t e2 : leads[m2]) {
              record(e, e2,
                     {k, l, small[m], small[m2], InductionStep::I, labels[e], labels[e2]});
              const std::size_t se = index.at(sgn_tensor(labels[e2]));
              const std::size_t se2 = index.at(sgn_tensor(labels[e]));
              record(se, se2,
                     {k, l, small[m], small[m2], InductionStep::II, labels[se], labels[se2]});
            }
        }
      }
    }

    OrderRelation rel = OrderRelation::from_pairs(labels_of(labels), pairs);
    rel.metadata() = {{"kind", "L"}, {"a", std::to_string(params.a())},
                      {"b", std::to_string(params.b())}, {"n", std::to_string(n)}};
    t.labels_.push_back(std::move(labels));
    t.index_.push_back(std::move(index));
    t.ranks_.push_back(std::move(rel));
    t.provenance_.push_back(std::move(provenance));
  }

 public:
  static PreceqLTable make(const WeightParams& params) {
    PreceqLTable t(params);
    t.labels_.push_back({Bipartition{}});
    t.index_.push_back({{Bipartition{}, 0}});
    OrderRelation rel({Bipartition{}.to_string()}, [](std::size_t, std::size_t) { return true; });
    rel.metadata() = {{"kind", "L"}, {"a", std::to_string(params.a())},
                      {"b", std::to_string(params.b())}, {"n", "0"}};
    t.ranks_.push_back(std::move(rel));
    t.provenance_.emplace_back();
    return t;
  }
};

PreceqLTable preceq_L(const WeightParams& params, int n) {
  if (n < 0) throw std::invalid_argument("preceq_L: negative rank");
  PreceqLTable t = PreceqLBuilder::make(params);
  PreceqLBuilder::extend(t, n);
  return t;
}

std::shared_ptr<const PreceqLTable> PreceqLCache::get(const WeightParams& params, int n) {
  if (n < 0) throw std::invalid_argument("preceq_L: negative rank");
  std::lock_guard lock(mutex_);
  auto it = tables_.find(params);
  if (it != tables_.end() && it->second->max_rank() >= n) return it->second;
  PreceqLTable t = it != tables_.end() ? *it->second : PreceqLBuilder::make(params);
  PreceqLBuilder::extend(t, n);
  auto shared = std::make_shared<const PreceqLTable>(std::move(t));
  tables_[params] = shared;
  return shared;
}

PreceqLCache& default_preceq_cache() {
  static PreceqLCache cache;
  return cache;
}

std::vector<std::vector<Bipartition>> lusztig_families(const WeightParams& params, int n) {
  if (params.has_symbols()) return comb_families(params, n);
  if (params.b() == 0) return {bipartitions_of(n)};
  std::map<int, std::vector<Bipartition>> by_mu;
  for (const auto& bp : bipartitions_of(n)) by_mu[bp.second.size()].push_back(bp);
  std::vector<std::vector<Bipartition>> out;
  for (auto& [size, members] : by_mu) out.push_back(std::move(members));
  return out;
}

}  // namespace bnorder
