#pragma once

#include <string>
#include <vector>

#include "bnorder/bipartition.hpp"
#include "bnorder/order_relation.hpp"
#include "bnorder/symbol.hpp"

namespace bnorder {

std::vector<std::string> labels_of(const std::vector<Bipartition>& bps);

/// (λ,μ) ≼_{a,b} (λ',μ'): dominance of the two symbols at a common level.
bool preceq_ab(const WeightParams& params, const Bipartition& x, const Bipartition& y);
OrderRelation ab_relation(const WeightParams& params, int n);

/// Bipartitions of n grouped by their symbol. Classes appear in
/// bipartitions_of order of their first member. Needs a > 0.
std::vector<std::vector<Bipartition>> comb_families(const WeightParams& params, int n);

/// a_{a,b}(λ,μ), the a-invariant read off the symbol. Needs a > 0.
long long a_ab(const WeightParams& params, const Bipartition& bp);

/// ω_L(E^(λ,μ)) = (|λ|-|μ|) b + 2(n(λ̄)-n(λ)+n(μ̄)-n(μ)) a; valid for a = 0 too.
long long omega(const WeightParams& params, const Bipartition& bp);

/// Dipper-James-Murphy dominance on bipartitions of equal size.
bool bip_dominance(const Bipartition& x, const Bipartition& y);
OrderRelation dominance_relation(int n);

enum class Adjacency {
  equal,
  case_a,  // same μ; λ' = λ + e_i - e_j, i < j
  case_b,  // same λ; μ' = μ + e_i - e_j, i < j
  case_c,  // |λ| < |λ'|; λ' = λ + e_i and μ' = μ - e_j
  not_adjacent,
};
std::string to_string(Adjacency adj);

/// Shape of a ⊴-comparable pair. Requires bip_dominance(x, y); throws
/// std::logic_error if an adjacent pair fits none of the three shapes.
Adjacency adjacency_classify(const Bipartition& x, const Bipartition& y);

enum class SpecialKind {
  equal_parameter,  // (a,b) = (1,1)
  type_d,           // (a,b) = (1,0)
};

/// Interleaving inequalities of (1,1)- or (1,0)-special bipartitions,
/// evaluated with λ padded to N+r and μ to N parts, N = max(n, 1).
bool is_special(SpecialKind kind, const Bipartition& bp);

/// The partition whose β-set is the symbol Z_{2,b}(λ,μ), b odd.
/// Its size is 2n + r(r+1)/2.
Partition pi_map(const WeightParams& params, const Bipartition& bp);
/// Dominance of pi_map images (a = 2, b odd).
OrderRelation pi_relation(const WeightParams& params, int n);

/// Z_{1,1}^N(λ,μ) read in interleaved order z_1 >= ... >= z_{2N+1}, next to
/// its image under the four-case doubling rule that yields Z_{2,3}^N(λ,μ).
struct TildeSequences {
  std::vector<int> z;
  std::vector<int> tilde;
};
TildeSequences tilde_sequences(const Bipartition& bp, int level);

/// Z_{2,3}^N(λ,μ) built from Z_{1,1}^N(λ,μ). Requires bp to be (1,1)-special.
SymbolMultiset tilde_transform(const Bipartition& bp, int level);

}  // namespace bnorder
