#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "bnorder/bipartition.hpp"
#include "bnorder/order_relation.hpp"
#include "bnorder/symbol.hpp"

namespace bnorder {

/// E^(λ,μ) ⊗ sgn = E^(μ̄,λ̄).
Bipartition sgn_tensor(const Bipartition& bp);

/// Constituents of Ind(E^(α,β) ⊠ sgn_l): every bipartition obtained by
/// raising l distinct parts (zero parts included) of (α,β) by one.
std::set<Bipartition> pieri_constituents(const Bipartition& small, int l);

/// a-invariant of E^(λ,μ) for every parameter regime: the symbol value for
/// a > 0, b|μ| for a = 0.
long long a_invariant(const WeightParams& params, const Bipartition& bp);

/// E^small ⊠ sgn_l ⇝ E^big: big is a Pieri constituent and the a-invariant is
/// preserved, a(small) + C(l,2) a = a(big). Needs a > 0.
bool leads_to(const WeightParams& params, const Bipartition& small, int l,
              const Bipartition& big);

/// One elementary step of the rank-n recursion: M ≼ M' at rank k, l = n-k,
/// and (I) M↑E, M'⇝E' or (II) M↑E'⊗sgn, M'⇝E⊗sgn.
enum class InductionStep { I, II };

struct ElementaryPair {
  int k;
  int l;
  Bipartition lower_source;  // M
  Bipartition upper_source;  // M'
  InductionStep step;
  Bipartition lower;         // E
  Bipartition upper;         // E'
};

std::string to_string(InductionStep step);

/// ≼_L on Irr(W_k) for every rank k = 0..n at fixed parameters.
class PreceqLTable {
 public:
  const WeightParams& params() const { return params_; }
  int max_rank() const { return static_cast<int>(ranks_.size()) - 1; }

  const std::vector<Bipartition>& labels(int k) const { return labels_.at(static_cast<std::size_t>(k)); }
  const OrderRelation& relation(int k) const { return ranks_.at(static_cast<std::size_t>(k)); }
  /// First witness found for every non-reflexive elementary pair at rank k
  /// (empty for a = 0, where the relation has a closed form).
  const std::vector<ElementaryPair>& provenance(int k) const {
    return provenance_.at(static_cast<std::size_t>(k));
  }

  bool holds(const Bipartition& x, const Bipartition& y) const;

 private:
  friend class PreceqLBuilder;
  explicit PreceqLTable(WeightParams params) : params_(params) {}

  WeightParams params_;
  std::vector<std::vector<Bipartition>> labels_;
  std::vector<std::map<Bipartition, std::size_t>> index_;
  std::vector<OrderRelation> ranks_;
  std::vector<std::vector<ElementaryPair>> provenance_;
};

/// Builds (or extends) the table up to rank n. Ranks are added one at a time
/// from the completed lower ranks.
PreceqLTable preceq_L(const WeightParams& params, int n);

/// Thread-safe memo of tables per parameter point; a request for rank n
/// reuses and extends the largest table built so far.
class PreceqLCache {
 public:
  std::shared_ptr<const PreceqLTable> get(const WeightParams& params, int n);

 private:
  std::mutex mutex_;
  std::map<WeightParams, std::shared_ptr<const PreceqLTable>> tables_;
};

/// Process-wide cache used by the verification layer.
PreceqLCache& default_preceq_cache();

/// Families of Irr(W_n): symbol classes for a > 0, |μ| classes for a = 0 < b,
/// one class for a = b = 0.
std::vector<std::vector<Bipartition>> lusztig_families(const WeightParams& params, int n);

}  // namespace bnorder
