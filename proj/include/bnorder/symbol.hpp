#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnorder/bipartition.hpp"

namespace bnorder {

/// The weight function L(s_i) = a, L(t) = b on W_n, with b = r*a + b'.
///
/// r and b' only exist for a > 0; every symbol-based operation rejects a = 0.
class WeightParams {
 public:
  WeightParams(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  bool has_symbols() const { return a_ > 0; }
  /// Quotient of b by a. Throws std::domain_error when a = 0.
  int r() const;
  /// Remainder of b by a, 0 <= b' < a. Throws std::domain_error when a = 0.
  int bprime() const;

  std::string to_string() const;

  friend bool operator==(const WeightParams&, const WeightParams&) = default;
  friend auto operator<=>(const WeightParams&, const WeightParams&) = default;

 private:
  int a_;
  int b_;
};

enum class SymbolClass {
  strict,   // conditions (M1) together with (M2) or (M3)
  relaxed,  // b' = 0 only: (M1) and no entry repeated more than twice
};

struct ValidityReport {
  bool length_ok = false;
  bool nonnegative = false;
  bool m1 = false;
  std::optional<bool> m2;  // only evaluated when b' = 0
  std::optional<bool> m3;  // only evaluated when b' > 0
  bool relaxed = false;

  bool strict() const {
    return length_ok && nonnegative && m1 && (m2.value_or(false) || m3.value_or(false));
  }
  std::string to_string() const;
};

/// Required entry sum at rank n and level N: n a + N^2 a + N(b-a) + C(r,2) a + r b'.
long long m1_sum(const WeightParams& params, int rank, int level);

ValidityReport validate(const WeightParams& params, int rank, int level,
                        std::span<const int> entries);

/// An element of M_{a,b;n}^N (strict) or of its relaxed enlargement.
/// Entries are kept in decreasing order. Construction enforces the invariants
/// of the requested class and throws std::invalid_argument otherwise.
class SymbolMultiset {
 public:
  SymbolMultiset(WeightParams params, int rank, int level, std::vector<int> entries,
                 SymbolClass cls = SymbolClass::strict);

  const WeightParams& params() const { return params_; }
  int rank() const { return rank_; }
  int level() const { return level_; }
  SymbolClass symbol_class() const { return class_; }
  std::span<const int> entries() const { return entries_; }

  std::string to_string() const;

  friend bool operator==(const SymbolMultiset&, const SymbolMultiset&) = default;

 private:
  WeightParams params_;
  int rank_;
  int level_;
  std::vector<int> entries_;
  SymbolClass class_;
};

ValidityReport validate(const SymbolMultiset& z);

/// Smallest N at which bp has a symbol: λ fits in N+r parts, μ in N parts.
int minimal_level(const WeightParams& params, const Bipartition& bp);

/// Z_{a,b}^N(λ,μ): entries (λ_i+N+r-i)a+b' and (μ_j+N-j)a.
SymbolMultiset z_multiset(const WeightParams& params, const Bipartition& bp, int level);
SymbolMultiset z_multiset(const WeightParams& params, const Bipartition& bp);

/// The two rows of the symbol: top from λ (≡ b' mod a), bottom from μ.
struct SymbolRows {
  std::vector<int> top;
  std::vector<int> bottom;
};
SymbolRows symbol_rows(const WeightParams& params, const Bipartition& bp, int level);

/// Every multiset of the given class at (rank, level), built directly from
/// the defining conditions (no bipartitions involved). Decreasing-lex order.
std::vector<SymbolMultiset> symbol_space(const WeightParams& params, int rank, int level,
                                         SymbolClass cls = SymbolClass::strict);

/// Z^0, the unique element of M_{a,b;0}^N.
SymbolMultiset base_symbol(const WeightParams& params, int level);

/// Inserts {0, b'} and adds a to every old entry.
SymbolMultiset shift(const SymbolMultiset& z);
/// Inverse of shift; throws std::invalid_argument when z is not a shift.
SymbolMultiset unshift(const SymbolMultiset& z);
/// Shifts z up to `level` (which must be >= z.level()).
SymbolMultiset lift_to(const SymbolMultiset& z, int level);

/// z1 ~ z2: one is obtained from the other by repeated shifts.
bool equivalent(const SymbolMultiset& z1, const SymbolMultiset& z2);

/// Smallest t for which conj_multiset(z, t) is defined.
int minimal_conjugation_level(const SymbolMultiset& z);
/// Complement of {ta+b'-z_i} in {0,a,..,ta} ∪ {b',a+b',..,ta+b'}; lands at
/// level t+1-N-r. Without t the minimal valid t is used.
SymbolMultiset conj_multiset(const SymbolMultiset& z, std::optional<int> t = std::nullopt);

/// Dominance of the decreasing entry sequences, after shifting both
/// arguments to a common level.
bool mdominance(const SymbolMultiset& z1, const SymbolMultiset& z2);

/// Σ(i-1)z_i - Σ(i-1)z^0_i with both sequences decreasing. Strict class only.
long long a_of_multiset(const SymbolMultiset& z);

/// Adds a to the largest l entries; the result lives at rank n+l.
SymbolMultiset hat_increase(const SymbolMultiset& z, int l);

}  // namespace bnorder
