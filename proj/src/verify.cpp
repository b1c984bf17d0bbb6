#include "bnorder/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "bnorder/biporders.hpp"
#include "bnorder/partition.hpp"
#include "bnorder/rep_bn.hpp"
#include "bnorder/type_dn.hpp"

namespace bnorder {

using nlohmann::json;

void CheckContext::fail(std::string witness) {
  ++violations_;
  if (witnesses_.size() < kWitnessCap) witnesses_.push_back(std::move(witness));
}

void CheckContext::note(std::string witness) {
  if (witnesses_.size() < kWitnessCap) witnesses_.push_back(std::move(witness));
}

json CheckReport::to_json() const {
  json j = {{"check", check_name},   {"n", n},
            {"instances", instances}, {"violations", violations},
            {"pass", pass},           {"witnesses", witnesses},
            {"elapsed_ms", elapsed_ms}};
  if (params) {
    j["a"] = params->a();
    j["b"] = params->b();
  } else {
    j["a"] = nullptr;
    j["b"] = nullptr;
  }
  return j;
}

namespace {

// ---------------------------------------------------------------- helpers

std::string seq(std::span<const int> v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::string bp_str(const Bipartition& bp) { return "(" + bp.to_string() + ")"; }

std::string pair_str(const Bipartition& x, const Bipartition& y) {
  return bp_str(x) + " <= " + bp_str(y);
}

std::vector<int> entries_of(const SymbolMultiset& z) {
  return {z.entries().begin(), z.entries().end()};
}

std::map<Bipartition, std::size_t> index_map(const std::vector<Bipartition>& bps) {
  std::map<Bipartition, std::size_t> out;
  for (std::size_t i = 0; i < bps.size(); ++i) out.emplace(bps[i], i);
  return out;
}

std::vector<std::size_t> family_ids(const std::vector<Bipartition>& bps,
                                    const std::vector<std::vector<Bipartition>>& families) {
  std::map<Bipartition, std::size_t> id;
  for (std::size_t f = 0; f < families.size(); ++f)
    for (const auto& bp : families[f]) id[bp] = f;
  std::vector<std::size_t> out;
  for (const auto& bp : bps) out.push_back(id.at(bp));
  return out;
}

bool same_ground(CheckContext& ctx, const OrderRelation& x, const OrderRelation& y) {
  if (x.ground() == y.ground()) return true;
  ctx.fail("relations have different ground sets");
  return false;
}

void expect_equal_relations(CheckContext& ctx, const OrderRelation& x, const std::string& xname,
                            const OrderRelation& y, const std::string& yname) {
  if (!same_ground(ctx, x, y)) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      ctx.expect(x.holds(i, j) == y.holds(i, j), [&] {
        return "(" + x.ground()[i] + ") <= (" + x.ground()[j] + "): " + xname + "=" +
               std::to_string(x.holds(i, j)) + " " + yname + "=" + std::to_string(y.holds(i, j));
      });
}

const OrderRelation& preceq_l_at(const WeightParams& p, int n,
                                 std::shared_ptr<const PreceqLTable>& keep) {
  keep = default_preceq_cache().get(p, n);
  return keep->relation(n);
}

Bipartition bp_of(std::initializer_list<int> lambda, std::initializer_list<int> mu) {
  return {Partition(std::vector<int>(lambda)), Partition(std::vector<int>(mu))};
}

// Covering pairs (i, j), i below j, of a strict order given by `below`.
std::vector<std::pair<std::size_t, std::size_t>> covers_of(
    std::size_t m, const std::function<bool(std::size_t, std::size_t)>& below) {
  std::vector<std::vector<char>> lt(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) lt[i][j] = i != j && below(i, j);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < m && cover; ++k)
        if (lt[i][k] && lt[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

// z' = z + e_k - e_l with k < l on the decreasing sequences.
bool unit_step(std::span<const int> lower, std::span<const int> upper) {
  if (lower.size() != upper.size()) return false;
  int up = -1, down = -1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    const int d = upper[i] - lower[i];
    if (d == 0) continue;
    if (d == 1 && up < 0) {
      up = static_cast<int>(i);
    } else if (d == -1 && down < 0) {
      down = static_cast<int>(i);
    } else {
      return false;
    }
  }
  return up >= 0 && down > up;
}

std::vector<BetaSet> beta_sets_below(int bound, int count) {
  std::vector<BetaSet> out;
  for (unsigned mask = 0; mask < (1u << bound); ++mask) {
    if (std::popcount(mask) != count) continue;
    std::vector<int> e;
    for (int x = 0; x < bound; ++x)
      if (mask & (1u << x)) e.push_back(x);
    out.emplace_back(std::move(e));
  }
  return out;
}

std::string beta_str(const BetaSet& x) { return seq(x.entries()); }

// ---------------------------------------------------------------- checks

void check_lem11(const WeightParams& p, int n, CheckContext& ctx) {
  const int level = n + 2;
  const auto space = symbol_space(p, n, level);
  std::set<std::vector<int>> from_space, from_bips;
  for (const auto& z : space) from_space.insert(entries_of(z));
  for (const auto& bp : bipartitions_of(n)) from_bips.insert(entries_of(z_multiset(p, bp, level)));
  ctx.expect(from_space == from_bips, [&] {
    return "symbol space has " + std::to_string(from_space.size()) + " elements, bipartitions give " +
           std::to_string(from_bips.size());
  });

  int t = 0;
  for (const auto& z : space) t = std::max(t, minimal_conjugation_level(z));
  std::vector<SymbolMultiset> conj;
  for (const auto& z : space) conj.push_back(conj_multiset(z, t));
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (i == j || !mdominance(space[i], space[j])) continue;
      ctx.expect(mdominance(conj[j], conj[i]), [&] {
        return seq(space[i].entries()) + " <= " + seq(space[j].entries()) + " but conj at t=" +
               std::to_string(t) + " gives " + seq(conj[j].entries()) + " !<= " +
               seq(conj[i].entries());
      });
    }
}

void check_lem11a(const WeightParams& p, int n, CheckContext& ctx) {
  for (const auto& bp : bipartitions_of(n)) {
    const SymbolMultiset z = z_multiset(p, bp);
    const SymbolMultiset target = z_multiset(p, sgn_tensor(bp));
    const int t0 = minimal_conjugation_level(z);
    for (int t = t0; t <= t0 + 1; ++t) {
      const SymbolMultiset c = conj_multiset(z, t);
      ctx.expect(equivalent(c, target), [&] {
        return "conj" + seq(z.entries()) + " at t=" + std::to_string(t) + " = " +
               seq(c.entries()) + " is not ~ Z" + bp_str(sgn_tensor(bp));
      });
    }
  }
}

void check_cor11(const WeightParams& p, int n, CheckContext& ctx) {
  const auto bps = bipartitions_of(n);
  const auto idx = index_map(bps);
  const OrderRelation rel = ab_relation(p, n);
  for (std::size_t i = 0; i < bps.size(); ++i)
    for (std::size_t j = 0; j < bps.size(); ++j) {
      const std::size_t si = idx.at(sgn_tensor(bps[i])), sj = idx.at(sgn_tensor(bps[j]));
      ctx.expect(rel.holds(i, j) == rel.holds(sj, si), [&] {
        return pair_str(bps[i], bps[j]) + " is " + std::to_string(rel.holds(i, j)) + ", dual " +
               pair_str(bps[sj], bps[si]) + " is " + std::to_string(rel.holds(sj, si));
      });
    }
}

void adjacency_steps(const WeightParams& p, int n, SymbolClass cls, CheckContext& ctx) {
  const WeightParams q(1, p.r());
  const int level = cls == SymbolClass::relaxed ? n : n + 1;
  const auto space = symbol_space(q, n, level, cls);
  auto below = [&](std::size_t i, std::size_t j) {
    return sequence_dominance(space[i].entries(), space[j].entries());
  };
  for (auto [i, j] : covers_of(space.size(), below))
    ctx.expect(unit_step(space[i].entries(), space[j].entries()), [&] {
      return "adjacent " + seq(space[i].entries()) + " < " + seq(space[j].entries()) +
             " do not differ by a unit move";
    });
}

void check_adja1(const WeightParams& p, int n, CheckContext& ctx) {
  adjacency_steps(p, n, SymbolClass::relaxed, ctx);
}

void check_remadja(const WeightParams& p, int n, CheckContext& ctx) {
  adjacency_steps(p, n, SymbolClass::strict, ctx);
}

void check_strange0(const WeightParams&, int n, CheckContext& ctx) {
  const auto parts = partitions_of(n);
  for (const auto& x : parts)
    for (const auto& y : parts)
      for (int l = 0; l <= 6; ++l)
        ctx.expect(dominance(x, y) == dominance(add_part(x, l), add_part(y, l)), [&] {
          return x.to_string() + " vs " + y.to_string() + " with part " + std::to_string(l);
        });
}

void check_strange1(const WeightParams&, int n, CheckContext& ctx) {
  const auto sets = beta_sets_below(10, n);
  for (const auto& x : sets) {
    for (int m = std::max(0, x.max() + 1 - n); m <= std::max(0, x.max() + 1 - n) + 3; ++m) {
      const BetaSet h = hat_complement(x, m);
      ctx.expect(partition_from_beta(h) == conjugate(partition_from_beta(x)), [&] {
        return "hat" + beta_str(x) + " at M=" + std::to_string(m) + " is " + beta_str(h);
      });
    }
    for (const auto& y : sets) {
      if (x.sum() != y.sum() || !dominance(x, y)) continue;
      const int m0 = std::max(0, std::max(x.max(), y.max()) + 1 - n);
      for (int m = m0; m <= m0 + 3; ++m)
        ctx.expect(dominance(hat_complement(y, m), hat_complement(x, m)), [&] {
          return beta_str(x) + " <= " + beta_str(y) + " but hat complements at M=" +
                 std::to_string(m) + " are not reversed";
        });
    }
  }
}

void check_strange2(const WeightParams&, int n, CheckContext& ctx) {
  constexpr int bound = 10;
  const auto sets = beta_sets_below(bound, n);
  for (const auto& x : sets)
    for (const auto& y : sets) {
      if (x.sum() != y.sum() || !dominance(x, y)) continue;
      std::vector<int> free;
      for (int v = 0; v < bound; ++v)
        if (!x.contains(v) && !y.contains(v)) free.push_back(v);
      for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
        std::vector<int> ux(x.entries().begin(), x.entries().end());
        std::vector<int> uy(y.entries().begin(), y.entries().end());
        for (std::size_t k = 0; k < free.size(); ++k)
          if (mask & (1u << k)) {
            ux.push_back(free[k]);
            uy.push_back(free[k]);
          }
        const BetaSet bx(std::move(ux)), by(std::move(uy));
        ctx.expect(dominance(bx, by), [&] {
          return beta_str(x) + " <= " + beta_str(y) + " but " + beta_str(bx) + " !<= " +
                 beta_str(by);
        });
      }
    }
}

void check_rem12(const WeightParams& p, int n, CheckContext& ctx) {
  const auto space = symbol_space(p, n, n + 2);
  std::vector<long long> av;
  for (const auto& z : space) av.push_back(a_of_multiset(z));
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (!mdominance(space[i], space[j])) continue;
      const bool ok = i == j ? av[i] == av[j] : av[j] < av[i];
      ctx.expect(ok, [&] {
        return seq(space[i].entries()) + " <= " + seq(space[j].entries()) + " with a-values " +
               std::to_string(av[i]) + ", " + std::to_string(av[j]);
      });
    }

  const auto bps = bipartitions_of(n);
  const auto fam = family_ids(bps, comb_families(p, n));
  const OrderRelation rel = ab_relation(p, n);
  for (std::size_t i = 0; i < bps.size(); ++i)
    for (std::size_t j = 0; j < bps.size(); ++j) {
      if (!rel.holds(i, j)) continue;
      const long long ai = a_ab(p, bps[i]), aj = a_ab(p, bps[j]);
      ctx.expect(aj <= ai && ((ai == aj) == (fam[i] == fam[j])), [&] {
        return pair_str(bps[i], bps[j]) + " with a-values " + std::to_string(ai) + ", " +
               std::to_string(aj);
      });
    }
}

void check_propasy(const WeightParams& p, int n, CheckContext& ctx) {
  expect_equal_relations(ctx, ab_relation(p, n), "ab", dominance_relation(n), "dominance");
}

void check_lemasy3(const WeightParams& p, int n, CheckContext& ctx) {
  const auto bps = bipartitions_of(n);
  const OrderRelation rel = ab_relation(p, n);
  for (std::size_t i = 0; i < bps.size(); ++i)
    for (std::size_t j = 0; j < bps.size(); ++j) {
      if (!rel.holds(i, j)) continue;
      ctx.expect(dominance(bps[i].first, bps[j].first, Sizes::may_differ),
                 [&] { return pair_str(bps[i], bps[j]) + " but first components not dominated"; });
    }
}

void check_expsubasy(const WeightParams& p, int n, CheckContext& ctx) {
  std::set<Bipartition> f0;
  for (int k = 0; k <= n; ++k)
    f0.insert({Partition(std::vector<int>(static_cast<std::size_t>(k), 1)),
               Partition(n - k > 0 ? std::vector<int>{n - k} : std::vector<int>{})});
  int hits = 0;
  for (const auto& family : comb_families(p, n)) {
    const std::set<Bipartition> members(family.begin(), family.end());
    if (members == f0) {
      ++hits;
      ctx.count();
      continue;
    }
    ctx.expect(members.size() == 1, [&] {
      std::string out = "non-singleton family outside F0:";
      for (const auto& bp : family) out += " " + bp_str(bp);
      return out;
    });
  }
  ctx.expect(hits == 1, [&] { return "F0 found " + std::to_string(hits) + " times"; });
}

void check_expab1_unique(const WeightParams& p, int n, CheckContext& ctx) {
  const SpecialKind kind = p.b() == 1 ? SpecialKind::equal_parameter : SpecialKind::type_d;
  for (const auto& family : comb_families(p, n)) {
    const auto specials = std::count_if(family.begin(), family.end(),
                                        [&](const Bipartition& bp) { return is_special(kind, bp); });
    ctx.expect(specials == 1, [&] {
      std::string out = std::to_string(specials) + " special members in family";
      for (const auto& bp : family) out += " " + bp_str(bp);
      return out;
    });
  }
}

void check_direct_equiv(const WeightParams&, int n, CheckContext& ctx) {
  const WeightParams p23(2, 3), p21(2, 1), p11(1, 1);
  std::vector<Bipartition> special;
  for (const auto& bp : bipartitions_of(n))
    if (is_special(SpecialKind::equal_parameter, bp)) special.push_back(bp);

  const int base = std::max(n, 1);
  for (const auto& bp : special)
    for (int level = base; level <= base + 1; ++level) {
      const SymbolMultiset tilde = tilde_transform(bp, level);
      const SymbolMultiset direct = z_multiset(p23, bp, level);
      ctx.expect(entries_of(tilde) == entries_of(direct), [&] {
        return bp_str(bp) + " at N=" + std::to_string(level) + ": rule gives " +
               seq(tilde.entries()) + ", direct " + seq(direct.entries());
      });
      const TildeSequences s = tilde_sequences(bp, level);
      long long lhs = 0, rhs_z = 0;
      for (std::size_t d = 1; d <= s.z.size(); ++d) {
        lhs += s.tilde[d - 1];
        rhs_z += s.z[d - 1];
        const int eps = d % 2 == 0 && d < s.z.size() && s.z[d - 1] == s.z[d] ? 1 : 0;
        const long long rhs = eps + static_cast<long long>((d + 1) / 2) + 2 * rhs_z;
        ctx.expect(lhs == rhs, [&] {
          return bp_str(bp) + " at N=" + std::to_string(level) + ", d=" + std::to_string(d) +
                 ": partial sum " + std::to_string(lhs) + " != " + std::to_string(rhs);
        });
      }
    }

  std::vector<Partition> pi3, pi1;
  for (const auto& bp : special) {
    pi3.push_back(pi_map(p23, bp));
    pi1.push_back(pi_map(p21, bp));
  }
  for (std::size_t i = 0; i < special.size(); ++i)
    for (std::size_t j = 0; j < special.size(); ++j) {
      const bool ab = preceq_ab(p11, special[i], special[j]);
      const bool d3 = dominance(pi3[i], pi3[j]);
      const bool d1 = dominance(pi1[i], pi1[j]);
      ctx.expect(ab == d3 && d3 == d1, [&] {
        return pair_str(special[i], special[j]) + ": ab=" + std::to_string(ab) +
               " pi3=" + std::to_string(d3) + " pi1=" + std::to_string(d1);
      });
    }
}

void check_mainbn(const WeightParams& p, int n, CheckContext& ctx) {
  std::shared_ptr<const PreceqLTable> keep;
  const OrderRelation& l = preceq_l_at(p, n, keep);
  const OrderRelation ab = ab_relation(p, n);
  if (!same_ground(ctx, l, ab)) return;
  ctx.count(static_cast<long long>(l.pairs().size()));
  for (auto [i, j] : relation_difference(l, ab))
    ctx.fail("(" + l.ground()[i] + ") <=_L (" + l.ground()[j] + ") but not <=_ab");
}

void check_ordmon(const WeightParams& p, int n, CheckContext& ctx) {
  std::shared_ptr<const PreceqLTable> keep;
  const OrderRelation& l = preceq_l_at(p, n, keep);
  const auto bps = bipartitions_of(n);
  const auto fam = family_ids(bps, lusztig_families(p, n));
  std::vector<long long> av;
  for (const auto& bp : bps) av.push_back(a_invariant(p, bp));
  for (auto [i, j] : l.pairs())
    ctx.expect(av[j] <= av[i] && ((av[i] == av[j]) == (fam[i] == fam[j])), [&] {
      return pair_str(bps[i], bps[j]) + " in L with a-values " + std::to_string(av[i]) + ", " +
             std::to_string(av[j]);
    });
}

void check_ordfam(const WeightParams& p, int n, CheckContext& ctx) {
  std::shared_ptr<const PreceqLTable> keep;
  const OrderRelation& l = preceq_l_at(p, n, keep);
  std::set<std::set<std::string>> classes, families;
  for (const auto& cls : l.classes()) {
    std::set<std::string> s;
    for (std::size_t i : cls) s.insert(l.ground()[i]);
    classes.insert(std::move(s));
  }
  for (const auto& family : lusztig_families(p, n)) {
    std::set<std::string> s;
    for (const auto& bp : family) s.insert(bp.to_string());
    families.insert(std::move(s));
  }
  for (const auto& cls : classes)
    ctx.expect(families.count(cls) == 1, [&] {
      std::string out = "L-class is not a family:";
      for (const auto& label : cls) out += " (" + label + ")";
      return out;
    });
  ctx.expect(classes.size() == families.size(), [&] {
    return std::to_string(classes.size()) + " L-classes but " + std::to_string(families.size()) +
           " families";
  });
}

void check_ordomg(const WeightParams& p, int n, CheckContext& ctx) {
  std::shared_ptr<const PreceqLTable> keep;
  const OrderRelation& l = preceq_l_at(p, n, keep);
  const auto bps = bipartitions_of(n);
  const auto fam = family_ids(bps, lusztig_families(p, n));
  std::vector<long long> om;
  for (const auto& bp : bps) om.push_back(omega(p, bp));
  for (auto [i, j] : l.pairs())
    ctx.expect(om[i] <= om[j] && ((om[i] == om[j]) == (fam[i] == fam[j])), [&] {
      return pair_str(bps[i], bps[j]) + " in L with omega " + std::to_string(om[i]) + ", " +
             std::to_string(om[j]);
    });
}

void check_expeq(const WeightParams& p, int n, CheckContext& ctx) {
  std::shared_ptr<const PreceqLTable> keep;
  expect_equal_relations(ctx, preceq_l_at(p, n, keep), "L", ab_relation(p, n), "ab");
}

void check_expasym2(const WeightParams& p, int n, CheckContext& ctx) {
  std::shared_ptr<const PreceqLTable> keep;
  expect_equal_relations(ctx, preceq_l_at(p, n, keep), "L", dominance_relation(n), "dominance");
  for (int k = 0; k < n; ++k) {
    const int l = n - k;
    for (const auto& small : bipartitions_of(k)) {
      std::vector<int> raised = small.first.padded(std::max(small.first.length(), l));
      for (int i = 0; i < l; ++i) ++raised[static_cast<std::size_t>(i)];
      const Bipartition big{Partition(std::move(raised)), small.second};
      ctx.expect(leads_to(p, small, l, big), [&] {
        return bp_str(small) + " does not lead to " + bp_str(big) + " with l=" + std::to_string(l);
      });
    }
  }
}

// Calls f(small, l, big, level) for every Pieri constituent of rank n.
template <class F>
void for_each_induction(const WeightParams& p, int n, F&& f) {
  for (int k = 0; k < n; ++k) {
    const int l = n - k;
    for (const auto& small : bipartitions_of(k))
      for (const auto& big : pieri_constituents(small, l))
        f(small, l, big, std::max(minimal_level(p, small), minimal_level(p, big)));
  }
}

void check_pieri1_bound(const WeightParams& p, int n, CheckContext& ctx) {
  for_each_induction(p, n, [&](const Bipartition& small, int l, const Bipartition& big, int level) {
    const SymbolMultiset u = z_multiset(p, small, level);
    const SymbolMultiset z = z_multiset(p, big, level);
    long long su = 0, sz = 0;
    bool ok = true;
    int bad = 0;
    for (std::size_t d = 1; d <= z.entries().size() && ok; ++d) {
      su += u.entries()[d - 1];
      sz += z.entries()[d - 1];
      if (sz > su + static_cast<long long>(std::min<std::size_t>(d, static_cast<std::size_t>(l))) * p.a()) {
        ok = false;
        bad = static_cast<int>(d);
      }
    }
    ctx.expect(ok, [&] {
      return bp_str(small) + " -> " + bp_str(big) + ": bound fails at d=" + std::to_string(bad);
    });
    ctx.expect(mdominance(z, hat_increase(u, l)), [&] {
      return bp_str(small) + " -> " + bp_str(big) + ": Z not below the raised symbol";
    });
  });
}

void check_pieri3_consistency(const WeightParams& p, int n, CheckContext& ctx) {
  for_each_induction(p, n, [&](const Bipartition& small, int l, const Bipartition& big, int level) {
    if (!leads_to(p, small, l, big)) return;
    const auto raised = entries_of(hat_increase(z_multiset(p, small, level), l));
    const auto direct = entries_of(z_multiset(p, big, level));
    ctx.expect(raised == direct, [&] {
      return bp_str(small) + " leads to " + bp_str(big) + " but raised symbol " + seq(raised) +
             " != " + seq(direct);
    });
  });
}

void check_badexp_chain(const WeightParams& p, int, CheckContext& ctx) {
  const std::vector<std::pair<Bipartition, std::vector<int>>> table = {
      {bp_of({}, {1, 1}), {5, 4, 3, 2, 1}},
      {bp_of({}, {2}), {6, 5, 3, 1, 0}},
      {bp_of({1}, {1}), {7, 4, 3, 1, 0}},
      {bp_of({1, 1}, {}), {7, 5, 2, 1, 0}},
      {bp_of({2}, {}), {9, 3, 2, 1, 0}},
  };
  std::vector<SymbolMultiset> rows;
  for (const auto& [bp, expected] : table) {
    rows.push_back(z_multiset(p, bp, 2));
    ctx.expect(entries_of(rows.back()) == expected, [&] {
      return bp_str(bp) + " gives " + seq(rows.back().entries()) + ", table has " + seq(expected);
    });
  }
  const auto space = symbol_space(p, 2, 2);
  ctx.expect(space.size() == table.size(),
             [&] { return "symbol space has " + std::to_string(space.size()) + " elements"; });

  auto below = [&](std::size_t i, std::size_t j) { return mdominance(rows[i], rows[j]); };
  const auto covers = covers_of(rows.size(), below);
  const std::vector<std::pair<std::size_t, std::size_t>> chain = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  for (const auto& c : chain)
    ctx.expect(std::find(covers.begin(), covers.end(), c) != covers.end(), [&] {
      return "rows " + std::to_string(c.first + 1) + " and " + std::to_string(c.second + 1) +
             " are not adjacent";
    });
  for (const auto& c : covers)
    ctx.expect(std::find(chain.begin(), chain.end(), c) != chain.end(), [&] {
      return "unexpected adjacent rows " + std::to_string(c.first + 1) + ", " +
             std::to_string(c.second + 1);
    });
}

void check_rembn_counterexample(const WeightParams& p, int n, CheckContext& ctx) {
  const auto found = counterexample_search(p, n);
  ctx.count(static_cast<long long>(ab_relation(p, n).pairs().size()));
  for (const auto& [x, y] : found) ctx.note(pair_str(x, y) + " in ab, not in L");
  if (found.empty()) ctx.fail("no pair lies in ab but not in L");

  const Bipartition x = bp_of({}, {2, 2, 1}), y = bp_of({3, 2}, {});
  std::shared_ptr<const PreceqLTable> keep;
  preceq_l_at(p, n, keep);
  ctx.note("printed pair " + pair_str(x, y) + ": ab=" + std::to_string(preceq_ab(p, x, y)) +
           " L=" + std::to_string(keep->holds(x, y)));
}

void check_sgn_duality(const WeightParams& p, int n, CheckContext& ctx) {
  std::shared_ptr<const PreceqLTable> keep;
  const OrderRelation& l = preceq_l_at(p, n, keep);
  const auto bps = bipartitions_of(n);
  const auto idx = index_map(bps);
  for (std::size_t i = 0; i < bps.size(); ++i)
    for (std::size_t j = 0; j < bps.size(); ++j) {
      const std::size_t si = idx.at(sgn_tensor(bps[i])), sj = idx.at(sgn_tensor(bps[j]));
      ctx.expect(l.holds(i, j) == l.holds(sj, si), [&] {
        return pair_str(bps[i], bps[j]) + " is " + std::to_string(l.holds(i, j)) +
               " in L, its sign dual is " + std::to_string(l.holds(sj, si));
      });
    }
}

void check_remdouble(const WeightParams&, int n, CheckContext& ctx) {
  const auto bps = bipartitions_of(n);
  for (const auto& x : bps)
    for (const auto& y : bps) {
      const bool split = dominance(x.first, y.first, Sizes::may_differ) &&
                         dominance(conjugate(y.second), conjugate(x.second), Sizes::may_differ);
      ctx.expect(bip_dominance(x, y) == split, [&] {
        return pair_str(x, y) + ": dominance " + std::to_string(bip_dominance(x, y)) +
               ", componentwise " + std::to_string(split);
      });
    }
}

void check_adjdouble(const WeightParams&, int n, CheckContext& ctx) {
  const auto bps = bipartitions_of(n);
  for (const auto& x : bps)
    for (const auto& y : bps) {
      if (x == y || !bip_dominance(x, y)) continue;
      std::string error;
      try {
        adjacency_classify(x, y);
      } catch (const std::logic_error& e) {
        error = e.what();
      }
      ctx.expect(error.empty(), [&] { return pair_str(x, y) + ": " + error; });
    }
}

void check_expsing(const WeightParams& p, int n, CheckContext& ctx) {
  const auto bps = bipartitions_of(n);
  std::vector<SymbolMultiset> low, high;
  for (const auto& bp : bps) {
    low.push_back(z_multiset(p, bp));
    high.push_back(z_multiset(p, bp, minimal_level(p, bp) + 1));
  }
  for (std::size_t i = 0; i < bps.size(); ++i)
    for (std::size_t j = 0; j < bps.size(); ++j)
      ctx.expect(equivalent(low[i], high[j]) == (i == j), [&] {
        return bp_str(bps[i]) + " and " + bp_str(bps[j]) + " give ~-equivalent symbols";
      });
  ctx.expect(comb_families(p, n).size() == bps.size(), [] { return "a family is not a singleton"; });
}

void check_symbols_valid(const WeightParams& p, int n, CheckContext& ctx) {
  const auto bps = bipartitions_of(n);
  for (const auto& bp : bps) {
    const int base = minimal_level(p, bp);
    const SymbolMultiset z0 = z_multiset(p, bp, base);
    for (int level = base; level <= base + 2; ++level) {
      const SymbolMultiset z = z_multiset(p, bp, level);
      ctx.expect(validate(z).strict(), [&] {
        return bp_str(bp) + " at N=" + std::to_string(level) + ": " + validate(z).to_string();
      });
      const SymbolMultiset next = z_multiset(p, bp, level + 1);
      ctx.expect(shift(z) == next && unshift(next) == z,
                 [&] { return bp_str(bp) + ": shift does not move N=" + std::to_string(level) + " up"; });
      ctx.expect(a_of_multiset(z) == a_of_multiset(z0),
                 [&] { return bp_str(bp) + ": a-value depends on N"; });
    }
    ctx.expect(omega(p, bp) == a_ab(p, sgn_tensor(bp)) - a_ab(p, bp),
               [&] { return bp_str(bp) + ": omega is not a(sgn) - a"; });
  }
  const long long sign_a = static_cast<long long>(n) * p.b() +
                           static_cast<long long>(n) * (n - 1) * p.a();
  ctx.expect(a_ab(p, bps.front()) == 0, [&] { return "a-value of the unit is not 0"; });
  ctx.expect(a_ab(p, bps.back()) == sign_a, [&] {
    return "a-value of the sign is " + std::to_string(a_ab(p, bps.back())) + ", expected " +
           std::to_string(sign_a);
  });
}

void check_dn_order(const WeightParams&, int n, CheckContext& ctx) {
  const auto labels = dn_labels(n);
  const long long bips = static_cast<long long>(bipartitions_of(n).size());
  const long long halves = n % 2 == 0 ? static_cast<long long>(partitions_of(n / 2).size()) : 0;
  ctx.expect(static_cast<long long>(labels.size()) == (bips + 3 * halves) / 2, [&] {
    return std::to_string(labels.size()) + " labels, expected " +
           std::to_string((bips + 3 * halves) / 2);
  });

  for (const auto& bp : bipartitions_of(n)) {
    if (bp.first == bp.second) continue;
    const Bipartition other{bp.second, bp.first};
    ctx.expect(!(is_special(SpecialKind::type_d, bp) && is_special(SpecialKind::type_d, other)),
               [&] { return "both orientations of " + bp_str(bp) + " are special"; });
    ctx.expect(IrrLabelDn::unsplit(sgn_tensor(bp)) == IrrLabelDn::unsplit(sgn_tensor(other)),
               [&] { return "sign twist of [" + bp.to_string() + "] depends on orientation"; });
  }

  std::vector<IrrLabelDn> special;
  for (const auto& label : labels) {
    std::string error;
    try {
      const IrrLabelDn rep = dn_special_representative(label);
      if (!dn_special(rep)) error = "representative " + rep.to_string() + " is not special";
    } catch (const std::logic_error& e) {
      error = e.what();
    }
    ctx.expect(error.empty(), [&] { return label.to_string() + ": " + error; });
    if (dn_special(label)) special.push_back(label);
  }

  const std::size_t m = special.size();
  std::vector<std::vector<char>> le(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) le[i][j] = dn_preceq(special[i], special[j]);
  for (std::size_t i = 0; i < m; ++i) {
    ctx.expect(le[i][i], [&] { return special[i].to_string() + " is not below itself"; });
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const bool halves_pair = special[i].is_split() && special[j].is_split() &&
                               special[i].bipartition() == special[j].bipartition();
      if (halves_pair)
        ctx.expect(!le[i][j], [&] {
          return special[i].to_string() + " and " + special[j].to_string() + " are comparable";
        });
      ctx.expect(!(le[i][j] && le[j][i]), [&] {
        return special[i].to_string() + " and " + special[j].to_string() + " are equivalent";
      });
      if (!le[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (le[j][k])
          ctx.expect(le[i][k], [&] {
            return "not transitive: " + special[i].to_string() + " <= " + special[j].to_string() +
                   " <= " + special[k].to_string();
          });
    }
  }
}

// ---------------------------------------------------------------- points

using PointList = std::vector<CheckPoint>;

void add_point(PointList& out, WeightParams p, int n) {
  for (const auto& q : out)
    if (q.params == p && q.n == n) return;
  out.push_back({p, n});
}

PointList grid(int lo, int bound) {
  PointList out;
  for (int n = lo; n <= bound; ++n)
    for (int a = 1; a <= 3; ++a)
      for (int b = 0; b <= 4; ++b) add_point(out, WeightParams(a, b), n);
  return out;
}

PointList grid_with_asymptotic(int bound, bool zero_a) {
  PointList out = grid(0, bound);
  for (int n = 1; n <= bound; ++n) {
    add_point(out, WeightParams(1, n), n);
    add_point(out, WeightParams(1, n - 1), n);
  }
  if (zero_a)
    for (int n = 0; n <= bound; ++n)
      for (int b = 0; b <= 2; ++b) add_point(out, WeightParams(0, b), n);
  return out;
}

PointList fixed(std::initializer_list<std::pair<int, int>> params, int lo, int bound) {
  PointList out;
  for (int n = lo; n <= bound; ++n)
    for (auto [a, b] : params) add_point(out, WeightParams(a, b), n);
  return out;
}

PointList asymptotic(int bound) {
  PointList out;
  for (int n = 1; n <= bound; ++n) {
    add_point(out, WeightParams(1, n), n);
    add_point(out, WeightParams(2, 2 * n - 1), n);
  }
  return out;
}

PointList params_free(int lo, int bound) {
  PointList out;
  for (int n = lo; n <= bound; ++n) out.push_back({WeightParams(1, 1), n});
  return out;
}

bool any_params(const WeightParams&, int) { return true; }
bool has_symbols(const WeightParams& p, int) { return p.a() > 0; }
bool asymptotic_regime(const WeightParams& p, int n) {
  return p.a() > 0 && p.b() > (n - 1) * p.a();
}

std::vector<CheckSpec> make_registry() {
  std::vector<CheckSpec> r;
  auto add = [&](std::string name, std::string statement, int max_n, bool uses_params,
                 std::string regime, std::function<bool(const WeightParams&, int)> applies,
                 std::function<PointList(int)> points,
                 std::function<void(const WeightParams&, int, CheckContext&)> body) {
    r.push_back({std::move(name), std::move(statement), max_n, uses_params, std::move(regime),
                 std::move(applies), std::move(points), std::move(body)});
  };

  add("lem11", "conjugation at a common t reverses dominance on M^N, N = n+2", 5, true, "a > 0",
      has_symbols, [](int k) { return grid(0, k); }, check_lem11);
  add("lem11a", "conj Z(l,m) ~ Z(conj m, conj l)", 6, true, "a > 0", has_symbols,
      [](int k) { return grid(0, k); }, check_lem11a);
  add("cor11", "preceq_ab is reversed by the sign twist", 6, true, "a > 0", has_symbols,
      [](int k) { return grid(0, k); }, check_cor11);
  add("adja1", "adjacent relaxed multisets differ by a unit move", 5, true, "a > 0, b' = 0",
      [](const WeightParams& p, int) { return p.a() > 0 && p.bprime() == 0; },
      [](int k) { return fixed({{1, 0}, {1, 1}, {1, 2}}, 0, k); }, check_adja1);
  add("remadja", "adjacent strict multisets differ by a unit move", 5, true, "a > 0, b' = 0",
      [](const WeightParams& p, int) { return p.a() > 0 && p.bprime() == 0; },
      [](int k) { return fixed({{1, 0}, {1, 1}, {1, 2}}, 0, k); }, check_remadja);
  add("strange0", "adding a part preserves and reflects dominance", 6, false, "any", any_params,
      [](int k) { return params_free(0, k); }, check_strange0);
  add("strange1", "hat complement reverses dominance of beta-sets below 10", 5, false, "any",
      any_params, [](int k) { return params_free(0, k); }, check_strange1);
  add("strange2", "adding common entries preserves dominance of beta-sets below 10", 5, false,
      "any", any_params, [](int k) { return params_free(0, k); }, check_strange2);
  add("rem12", "dominance lowers the a-value, strictly between distinct symbols", 6, true, "a > 0",
      has_symbols, [](int k) { return grid(0, k); }, check_rem12);
  add("propasy", "preceq_ab equals bipartition dominance", 6, true, "b > (n-1)a > 0",
      asymptotic_regime, asymptotic, check_propasy);
  add("lemasy3", "preceq_ab implies dominance of first components", 6, true, "b > (n-1)a > 0",
      asymptotic_regime, asymptotic, check_lemasy3);
  add("expsubasy", "families at (1,n-1) are F0 and singletons", 8, true, "(a,b) = (1,n-1)",
      [](const WeightParams& p, int n) { return n >= 1 && p.a() == 1 && p.b() == n - 1; },
      [](int k) {
        PointList out;
        for (int n = 1; n <= k; ++n) out.push_back({WeightParams(1, n - 1), n});
        return out;
      },
      check_expsubasy);
  add("expab1_unique", "each family has exactly one special member", 8, true, "(1,1) or (1,0)",
      [](const WeightParams& p, int) { return p.a() == 1 && p.b() <= 1; },
      [](int k) { return fixed({{1, 1}, {1, 0}}, 0, k); }, check_expab1_unique);
  add("direct_equiv", "doubling rule gives Z_{2,3}; ab(1,1), pi_3 and pi_1 dominance agree", 7,
      false, "any", any_params, [](int k) { return params_free(0, k); }, check_direct_equiv);
  add("mainbn", "preceq_L is contained in preceq_ab", 5, true, "a > 0", has_symbols,
      [](int k) { return grid_with_asymptotic(k, false); }, check_mainbn);
  add("ordmon", "preceq_L lowers the a-value, equality only inside families", 5, true, "any",
      any_params, [](int k) { return grid_with_asymptotic(k, true); }, check_ordmon);
  add("ordfam", "classes of preceq_L are the families", 5, true, "any", any_params,
      [](int k) { return grid_with_asymptotic(k, true); }, check_ordfam);
  add("ordomg", "preceq_L raises omega, equality only inside families", 5, true, "any",
      any_params, [](int k) { return grid_with_asymptotic(k, true); }, check_ordomg);
  add("expeq", "preceq_L equals preceq_ab", 5, true, "(1,1) or (1,0)",
      [](const WeightParams& p, int) { return p.a() == 1 && p.b() <= 1; },
      [](int k) { return fixed({{1, 1}, {1, 0}}, 0, k); }, check_expeq);
  add("expasym2", "preceq_L equals dominance; raising the top l parts of the first component leads",
      5, true, "b > (n-1)a > 0", asymptotic_regime, asymptotic, check_expasym2);
  add("pieri1_bound", "partial sums grow by at most min(d,l)a under induction", 5, true, "a > 0",
      has_symbols, [](int k) { return grid(1, k); }, check_pieri1_bound);
  add("pieri3_consistency", "leads_to implies Z(big) = raised Z(small)", 5, true, "a > 0",
      has_symbols, [](int k) { return grid(1, k); }, check_pieri3_consistency);
  add("badexp_chain", "the five symbols at (2,3), n = 2 form a chain of adjacent rows", 2, true,
      "(a,b) = (2,3), n = 2",
      [](const WeightParams& p, int n) { return p == WeightParams(2, 3) && n == 2; },
      [](int k) { return k >= 2 ? PointList{{WeightParams(2, 3), 2}} : PointList{}; },
      check_badexp_chain);
  add("rembn_counterexample", "some pair lies in preceq_ab but not in preceq_L", 5, true,
      "(a,b) = (2,1), n = 5",
      [](const WeightParams& p, int n) { return p == WeightParams(2, 1) && n == 5; },
      [](int k) { return k >= 5 ? PointList{{WeightParams(2, 1), 5}} : PointList{}; },
      check_rembn_counterexample);
  add("sgn_duality", "preceq_L is reversed by the sign twist", 5, true, "any", any_params,
      [](int k) { return grid_with_asymptotic(k, true); }, check_sgn_duality);
  add("remdouble", "bipartition dominance splits into two componentwise conditions", 6, false,
      "any", any_params, [](int k) { return params_free(0, k); }, check_remdouble);
  add("adjdouble", "adjacent bipartitions take one of the three shapes", 6, false, "any",
      any_params, [](int k) { return params_free(0, k); }, check_adjdouble);
  add("expsing", "symbols of distinct bipartitions are never equivalent", 6, true,
      "a > 0, b' > 0", [](const WeightParams& p, int) { return p.a() > 0 && p.bprime() > 0; },
      [](int k) {
        PointList out;
        for (const auto& pt : grid(0, k))
          if (pt.params.bprime() > 0) out.push_back(pt);
        return out;
      },
      check_expsing);
  add("symbols_valid", "symbols validate, shift between levels and give N-free invariants", 6,
      true, "a > 0", has_symbols, [](int k) { return grid(0, k); }, check_symbols_valid);
  add("dn_order", "type D labels: count, representatives, partial order on special labels", 8,
      false, "n >= 2", [](const WeightParams&, int n) { return n >= 2; },
      [](int k) { return params_free(2, k); }, check_dn_order);
  return r;
}

CheckReport execute(const CheckSpec& spec, const WeightParams& params, int n) {
  const auto start = std::chrono::steady_clock::now();
  CheckContext ctx;
  try {
    spec.body(params, n, ctx);
  } catch (const std::exception& e) {
    ctx.fail(std::string("exception: ") + e.what());
  }
  CheckReport report;
  report.check_name = spec.name;
  if (spec.uses_params) report.params = params;
  report.n = n;
  report.instances = ctx.instances();
  report.violations = ctx.violations();
  report.pass = ctx.violations() == 0;
  report.witnesses = std::move(ctx.witnesses());
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = make_registry();
  return registry;
}

const CheckSpec* find_check(const std::string& name) {
  for (const auto& spec : check_registry())
    if (spec.name == name) return &spec;
  return nullptr;
}

CheckReport run_check(const std::string& name, const WeightParams& params, int n) {
  const CheckSpec* spec = find_check(name);
  if (!spec) throw CheckError(CheckError::Kind::unknown_check, "unknown check '" + name + "'");
  if (n < 0 || n > spec->max_n)
    throw CheckError(CheckError::Kind::beyond_bound,
                     name + ": n = " + std::to_string(n) + " outside 0.." +
                         std::to_string(spec->max_n));
  if (!spec->applies(params, n))
    throw CheckError(CheckError::Kind::wrong_regime,
                     name + " needs " + spec->regime + ", got " + params.to_string() +
                         " at n = " + std::to_string(n));
  return execute(*spec, params, n);
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& names, std::optional<int> bound) {
  std::vector<const CheckSpec*> chosen;
  if (names.empty()) {
    for (const auto& spec : check_registry()) chosen.push_back(&spec);
  } else {
    for (const auto& name : names) {
      const CheckSpec* spec = find_check(name);
      if (!spec) throw CheckError(CheckError::Kind::unknown_check, "unknown check '" + name + "'");
      chosen.push_back(spec);
    }
  }
  std::vector<CheckReport> out;
  for (const CheckSpec* spec : chosen) {
    const int k = bound ? std::min(*bound, spec->max_n) : spec->max_n;
    for (const auto& pt : spec->default_points(k)) out.push_back(execute(*spec, pt.params, pt.n));
  }
  return out;
}

std::vector<std::pair<Bipartition, Bipartition>> counterexample_search(const WeightParams& params,
                                                                       int n) {
  if (params.a() <= 0) throw std::domain_error("counterexample_search needs a > 0");
  const auto table = default_preceq_cache().get(params, n);
  const OrderRelation ab = ab_relation(params, n);
  const auto& labels = table->labels(n);
  std::vector<std::pair<Bipartition, Bipartition>> out;
  for (auto [i, j] : relation_difference(ab, table->relation(n)))
    out.emplace_back(labels[i], labels[j]);
  return out;
}

std::string reports_to_jsonl(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += r.to_json().dump() + "\n";
  return out;
}

std::string summary_table(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "check" << std::setw(9) << "(a,b)" << std::setw(4) << "n"
      << std::right << std::setw(12) << "instances" << std::setw(11) << "violations"
      << std::setw(8) << "result" << std::setw(11) << "ms" << '\n';
  long long failed = 0;
  double total_ms = 0;
  for (const auto& r : reports) {
    out << std::left << std::setw(22) << r.check_name << std::setw(9)
        << (r.params ? r.params->to_string() : "-") << std::setw(4) << r.n << std::right
        << std::setw(12) << r.instances << std::setw(11) << r.violations << std::setw(8)
        << (r.pass ? "PASS" : "FAIL") << std::setw(11) << std::fixed << std::setprecision(1)
        << r.elapsed_ms << '\n';
    if (!r.pass) {
      ++failed;
      for (const auto& w : r.witnesses) out << "    " << w << '\n';
    }
    total_ms += r.elapsed_ms;
  }
  out << reports.size() << " runs, " << failed << " failed, " << std::fixed << std::setprecision(1)
      << total_ms << " ms\n";
  return out.str();
}

}  // namespace bnorder
