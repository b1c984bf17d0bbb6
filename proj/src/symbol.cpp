#include "bnorder/symbol.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bnorder {

WeightParams::WeightParams(int a, int b) : a_(a), b_(b) {
  if (a < 0 || b < 0) throw std::invalid_argument("weight parameters must be non-negative");
}

int WeightParams::r() const {
  if (a_ == 0) throw std::domain_error("r is undefined for a = 0");
  return b_ / a_;
}

int WeightParams::bprime() const {
  if (a_ == 0) throw std::domain_error("b' is undefined for a = 0");
  return b_ % a_;
}

std::string WeightParams::to_string() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

std::string ValidityReport::to_string() const {
  auto yn = [](bool v) { return v ? "yes" : "no"; };
  std::string out = "length ";
  out += yn(length_ok);
  out += ", non-negative ";
  out += yn(nonnegative);
  out += ", M1 ";
  out += yn(m1);
  if (m2) {
    out += ", M2 ";
    out += yn(*m2);
  }
  if (m3) {
    out += ", M3 ";
    out += yn(*m3);
  }
  out += ", relaxed ";
  out += yn(relaxed);
  out += " => ";
  out += strict() ? "strict" : (relaxed ? "relaxed only" : "invalid");
  return out;
}

long long m1_sum(const WeightParams& params, int rank, int level) {
  const long long a = params.a(), b = params.b(), r = params.r(), bp = params.bprime();
  const long long n = rank, N = level;
  return n * a + N * N * a + N * (b - a) + r * (r - 1) / 2 * a + r * bp;
}

ValidityReport validate(const WeightParams& params, int rank, int level,
                        std::span<const int> entries) {
  const int a = params.a(), r = params.r(), bp = params.bprime();
  ValidityReport rep;
  rep.length_ok = level >= 0 && entries.size() == static_cast<std::size_t>(2 * level + r);
  rep.nonnegative = std::all_of(entries.begin(), entries.end(), [](int x) { return x >= 0; });
  rep.m1 = std::accumulate(entries.begin(), entries.end(), 0LL) == m1_sum(params, rank, level);

  std::map<int, int> mult;
  for (int x : entries) ++mult[x];
  int max_mult = 0;
  for (auto [v, c] : mult) max_mult = std::max(max_mult, c);

  if (bp == 0) {
    const bool congruent =
        std::all_of(entries.begin(), entries.end(), [a](int x) { return x % a == 0; });
    rep.m2 = static_cast<int>(mult.size()) >= level + r && max_mult <= 2 && congruent;
    rep.relaxed = rep.length_ok && rep.nonnegative && rep.m1 && max_mult <= 2;
  } else {
    int zero_class = 0, bp_class = 0;
    for (int x : entries) {
      if (x < 0) continue;
      if (x % a == 0) ++zero_class;
      if (x % a == bp) ++bp_class;
    }
    rep.m3 = max_mult <= 1 && zero_class == level && bp_class == level + r;
    rep.relaxed = false;
  }
  return rep;
}

SymbolMultiset::SymbolMultiset(WeightParams params, int rank, int level, std::vector<int> entries,
                               SymbolClass cls)
    : params_(params), rank_(rank), level_(level), entries_(std::move(entries)), class_(cls) {
  if (!params_.has_symbols()) throw std::domain_error("symbols need a > 0");
  if (rank < 0 || level < 0) throw std::invalid_argument("rank and level must be non-negative");
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
  const ValidityReport rep = validate(params_, rank_, level_, entries_);
  const bool ok = cls == SymbolClass::strict ? rep.strict() : rep.relaxed;
  if (!ok)
    throw std::invalid_argument("multiset " + to_string() + " is not a valid " +
                                (cls == SymbolClass::strict ? "strict" : "relaxed") +
                                " symbol for a,b=" + params_.to_string() + ", n=" +
                                std::to_string(rank) + ", N=" + std::to_string(level) + ": " +
                                rep.to_string());
}

std::string SymbolMultiset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + "}";
}

ValidityReport validate(const SymbolMultiset& z) {
  return validate(z.params(), z.rank(), z.level(), z.entries());
}

std::vector<SymbolMultiset> symbol_space(const WeightParams& params, int rank, int level,
                                         SymbolClass cls) {
  if (!params.has_symbols()) throw std::domain_error("symbols need a > 0");
  const int a = params.a(), bp = params.bprime();
  if (cls == SymbolClass::relaxed && bp != 0)
    throw std::invalid_argument("relaxed multisets need b' = 0");
  const bool two_classes = cls == SymbolClass::strict && bp > 0;
  const int step = cls == SymbolClass::relaxed ? 1 : a;

  // Smallest possible sum of k more entries from one residue class.
  auto min_sum = [&](long long k, int offset, int cap) {
    long long out = 0;
    for (long long j = 0; j < k; ++j) out += step * (j / cap) + offset;
    return out;
  };

  std::vector<SymbolMultiset> out;
  std::vector<int> cur;
  // left0 / leftb: open slots in the 0 and b' classes (one shared pool if b' = 0)
  std::function<void(int, int, long long, int, int)> rec = [&](int left0, int leftb, long long sum,
                                                              int prev, int prev_count) {
    const int left = left0 + leftb;
    if (left == 0) {
      if (sum != 0) return;
      const ValidityReport rep = validate(params, rank, level, cur);
      if (cls == SymbolClass::strict ? rep.strict() : rep.relaxed)
        out.emplace_back(params, rank, level, cur, cls);
      return;
    }
    const long long floor_sum = two_classes ? min_sum(left0, 0, 1) + min_sum(leftb, bp, 1)
                                            : min_sum(left, 0, 2);
    if (sum < floor_sum) return;
    for (int x = static_cast<int>(std::min<long long>(prev, sum)); x >= 0; --x) {
      if (static_cast<long long>(x) * left < sum) break;
      const int count = x == prev ? prev_count + 1 : 1;
      if (count > (two_classes ? 1 : 2)) continue;
      if (two_classes) {
        if (x % a == 0 && left0 > 0) {
          cur.push_back(x);
          rec(left0 - 1, leftb, sum - x, x, count);
          cur.pop_back();
        } else if (x % a == bp && leftb > 0) {
          cur.push_back(x);
          rec(left0, leftb - 1, sum - x, x, count);
          cur.pop_back();
        }
      } else if (x % step == 0) {
        cur.push_back(x);
        rec(left - 1, 0, sum - x, x, count);
        cur.pop_back();
      }
    }
  };
  const long long total = m1_sum(params, rank, level);
  if (two_classes)
    rec(level, level + params.r(), total, static_cast<int>(total), 0);
  else
    rec(2 * level + params.r(), 0, total, static_cast<int>(total), 0);
  return out;
}

int minimal_level(const WeightParams& params, const Bipartition& bp) {
  return std::max({0, bp.second.length(), bp.first.length() - params.r()});
}

SymbolRows symbol_rows(const WeightParams& params, const Bipartition& bp, int level) {
  const int a = params.a(), r = params.r(), bprime = params.bprime();
  if (level < minimal_level(params, bp))
    throw std::invalid_argument("level N=" + std::to_string(level) + " too small for " +
                                bp.to_string());
  SymbolRows rows;
  const auto lam = bp.first.padded(level + r);
  const auto mu = bp.second.padded(level);
  for (int i = 1; i <= level + r; ++i)
    rows.top.push_back((lam[static_cast<std::size_t>(i - 1)] + level + r - i) * a + bprime);
  for (int j = 1; j <= level; ++j)
    rows.bottom.push_back((mu[static_cast<std::size_t>(j - 1)] + level - j) * a);
  return rows;
}

SymbolMultiset z_multiset(const WeightParams& params, const Bipartition& bp, int level) {
  if (!params.has_symbols()) throw std::domain_error("symbols need a > 0");
  SymbolRows rows = symbol_rows(params, bp, level);
  rows.top.insert(rows.top.end(), rows.bottom.begin(), rows.bottom.end());
  return SymbolMultiset(params, bp.size(), level, std::move(rows.top));
}

SymbolMultiset z_multiset(const WeightParams& params, const Bipartition& bp) {
  if (!params.has_symbols()) throw std::domain_error("symbols need a > 0");
  return z_multiset(params, bp, minimal_level(params, bp));
}

SymbolMultiset base_symbol(const WeightParams& params, int level) {
  return z_multiset(params, Bipartition{}, level);
}

SymbolMultiset shift(const SymbolMultiset& z) {
  const int a = z.params().a();
  std::vector<int> out{0, z.params().bprime()};
  for (int x : z.entries()) out.push_back(x + a);
  return SymbolMultiset(z.params(), z.rank(), z.level() + 1, std::move(out), z.symbol_class());
}

SymbolMultiset unshift(const SymbolMultiset& z) {
  const int a = z.params().a();
  if (z.level() < 1) throw std::invalid_argument("unshift: level 0 multiset " + z.to_string());
  std::vector<int> rest(z.entries().begin(), z.entries().end());
  for (int target : {0, z.params().bprime()}) {
    auto it = std::find(rest.begin(), rest.end(), target);
    if (it == rest.end())
      throw std::invalid_argument("unshift: " + z.to_string() + " does not contain " +
                                  std::to_string(target));
    rest.erase(it);
  }
  for (int& x : rest) {
    if (x < a) throw std::invalid_argument("unshift: " + z.to_string() + " is not a shift");
    x -= a;
  }
  return SymbolMultiset(z.params(), z.rank(), z.level() - 1, std::move(rest), z.symbol_class());
}

SymbolMultiset lift_to(const SymbolMultiset& z, int level) {
  if (level < z.level())
    throw std::invalid_argument("lift_to: target level below current level");
  SymbolMultiset out = z;
  while (out.level() < level) out = shift(out);
  return out;
}

namespace {

void require_comparable(const SymbolMultiset& z1, const SymbolMultiset& z2, const char* what) {
  if (z1.params() != z2.params() || z1.rank() != z2.rank())
    throw std::invalid_argument(std::string(what) +
                                ": multisets belong to different parameters or ranks");
}

std::map<int, int> conjugation_frame(const WeightParams& params, int t) {
  std::map<int, int> frame;
  for (int k = 0; k <= t; ++k) {
    ++frame[k * params.a()];
    ++frame[k * params.a() + params.bprime()];
  }
  return frame;
}

// Complement at t, or nullopt when t is not large enough.
std::optional<std::vector<int>> try_conjugate(const SymbolMultiset& z, int t) {
  const WeightParams& p = z.params();
  if (t + 1 - z.level() - p.r() < 0) return std::nullopt;
  const int top = t * p.a() + p.bprime();
  std::map<int, int> frame = conjugation_frame(p, t);
  for (int x : z.entries()) {
    auto it = frame.find(top - x);
    if (it == frame.end() || it->second == 0) return std::nullopt;
    --it->second;
  }
  std::vector<int> out;
  for (auto [v, c] : frame)
    for (int i = 0; i < c; ++i) out.push_back(v);
  return out;
}

}  // namespace

bool equivalent(const SymbolMultiset& z1, const SymbolMultiset& z2) {
  require_comparable(z1, z2, "equivalent");
  const int level = std::max(z1.level(), z2.level());
  const SymbolMultiset l1 = lift_to(z1, level), l2 = lift_to(z2, level);
  return std::ranges::equal(l1.entries(), l2.entries());
}

int minimal_conjugation_level(const SymbolMultiset& z) {
  const WeightParams& p = z.params();
  const int max_entry = z.entries().empty() ? 0 : z.entries().front();
  const int start = std::max(0, (max_entry - p.bprime() + p.a() - 1) / p.a());
  // Once the frame covers every entry, a valid t exists within a few more
  // steps or not at all (entries off the two residue classes).
  const int stop = start + 2 * z.level() + p.r() + 2;
  for (int t = start; t <= stop; ++t)
    if (try_conjugate(z, t)) return t;
  throw std::invalid_argument("conj_multiset: no valid t for " + z.to_string());
}

SymbolMultiset conj_multiset(const SymbolMultiset& z, std::optional<int> t) {
  const int tt = t ? *t : minimal_conjugation_level(z);
  auto out = try_conjugate(z, tt);
  if (!out)
    throw std::invalid_argument("conj_multiset: t=" + std::to_string(tt) + " too small for " +
                                z.to_string());
  return SymbolMultiset(z.params(), z.rank(), tt + 1 - z.level() - z.params().r(),
                        std::move(*out), z.symbol_class());
}

bool mdominance(const SymbolMultiset& z1, const SymbolMultiset& z2) {
  require_comparable(z1, z2, "mdominance");
  if (z1.level() == z2.level()) return sequence_dominance(z1.entries(), z2.entries());
  const int level = std::max(z1.level(), z2.level());
  return sequence_dominance(lift_to(z1, level).entries(), lift_to(z2, level).entries());
}

long long a_of_multiset(const SymbolMultiset& z) {
  if (z.symbol_class() != SymbolClass::strict)
    throw std::invalid_argument("a_of_multiset: relaxed multisets have no a-invariant");
  const SymbolMultiset base = base_symbol(z.params(), z.level());
  long long out = 0;
  for (std::size_t i = 0; i < z.entries().size(); ++i)
    out += static_cast<long long>(i) * (z.entries()[i] - base.entries()[i]);
  return out;
}

SymbolMultiset hat_increase(const SymbolMultiset& z, int l) {
  if (l < 0 || l > static_cast<int>(z.entries().size()))
    throw std::invalid_argument("hat_increase: l=" + std::to_string(l) + " out of range for " +
                                z.to_string());
  std::vector<int> out(z.entries().begin(), z.entries().end());
  for (int i = 0; i < l; ++i) out[static_cast<std::size_t>(i)] += z.params().a();
  return SymbolMultiset(z.params(), z.rank() + l, z.level(), std::move(out), z.symbol_class());
}

}  // namespace bnorder
