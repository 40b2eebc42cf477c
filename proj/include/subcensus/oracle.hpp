#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "subcensus/biguint.hpp"
#include "subcensus/gf2linalg.hpp"
#include "subcensus/grouptable.hpp"

namespace subcensus {

inline constexpr int kDefaultOracleCap = 256;
inline constexpr int kHardOracleCap = 512;

/// Subgroup counts by order exponent: s[k] = number of subgroups of order 2^k.
struct CensusTable {
  int n = 0;
  std::vector<BigUint> s;

  BigUint total() const {
    BigUint t;
    for (const BigUint& v : s) t += v;
    return t;
  }
};

/// The full subgroup lattice of a small 2-group, one level per order
/// exponent. Built bottom-up: every subgroup of order 2^{k+1} contains an
/// index-2 subgroup, so extending each level-k subgroup by one generator
/// and deduplicating is complete.
class SubgroupLattice {
 public:
  SubgroupLattice(const GroupTable& g, std::vector<std::vector<SubgroupSet>> levels)
      : group_(&g), levels_(std::move(levels)) {}

  const GroupTable& group() const { return *group_; }
  int top_level() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<SubgroupSet>& level(int k) const { return levels_[static_cast<std::size_t>(k)]; }

  std::size_t total_subgroups() const {
    std::size_t t = 0;
    for (const auto& lv : levels_) t += lv.size();
    return t;
  }

  /// covers()[k][i] lists the level-(k+1) indices of the subgroups covering
  /// levels()[k][i]. Maximal subgroups of K are the preimages of hyperplanes
  /// of K/Phi(K), so each edge is generated rather than searched for.
  std::vector<std::vector<std::vector<int>>> covers() const;

 private:
  const GroupTable* group_;
  std::vector<std::vector<SubgroupSet>> levels_;
};

namespace detail {

/// Frattini subgroup of the subgroup spanned by `members` (closure of its
/// squares and commutators), as a member set in the parent group.
inline SubgroupSet frattini_of_members(const GroupTable& g, const std::vector<int>& members) {
  SubgroupSet seen(g);
  std::vector<int> gens;
  for (int a : members) {
    const int sq = g.op(a, a);
    if (!seen.contains(sq)) {
      seen.add(sq);
      gens.push_back(sq);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const int c = g.commutator(members[i], members[j]);
      if (!seen.contains(c)) {
        seen.add(c);
        gens.push_back(c);
      }
    }
  return g.closure(gens);
}

/// Coset representatives of P inside H, indexed by F_2 coordinates: rep[v]
/// is an element whose coset corresponds to coordinate vector v in H/P.
/// Requires H/P elementary abelian (P contains squares and commutators of H).
struct CosetSpace {
  int dim = 0;
  std::vector<int> rep;  // size 2^dim
};

inline CosetSpace coset_space(const GroupTable& g, const std::vector<int>& h_members,
                              const SubgroupSet& p) {
  CosetSpace cs;
  cs.rep = {0};
  SubgroupSet covered = p;
  std::vector<int> covered_members = p.members();
  for (int m : h_members) {
    if (covered.contains(m)) continue;
    // New basis coset: double the representative table.
    const std::size_t half = cs.rep.size();
    for (std::size_t v = 0; v < half; ++v) cs.rep.push_back(g.op(cs.rep[v], m));
    ++cs.dim;
    const std::size_t old = covered_members.size();
    for (std::size_t i = 0; i < old; ++i) {
      const int e = g.op(covered_members[i], m);
      covered.add(e);
      covered_members.push_back(e);
    }
  }
  return cs;
}

}  // namespace detail

inline SubgroupLattice enumerate_lattice(const GroupTable& g, int order_cap = kDefaultOracleCap) {
  if (order_cap > kHardOracleCap)
    throw std::invalid_argument("oracle cap above hard limit " + std::to_string(kHardOracleCap));
  if (g.order() > order_cap)
    throw std::invalid_argument("enumerate_lattice: |" + g.label() + "| = " +
                                std::to_string(g.order()) + " exceeds oracle cap " +
                                std::to_string(order_cap));
  if (g.order() > kDefaultOracleCap)
    std::fprintf(stderr, "warning: enumerating the subgroup lattice of %s (order %d > %d)\n",
                 g.label().c_str(), g.order(), kDefaultOracleCap);

  const int n = g.order_exponent();
  std::vector<std::vector<SubgroupSet>> levels(static_cast<std::size_t>(n) + 1,
                                               std::vector<SubgroupSet>{});
  levels[0].push_back(g.trivial_subgroup());

  for (int k = 0; k < n; ++k) {
    std::unordered_set<SubgroupSet, SubgroupSetHash> next;
    for (const SubgroupSet& h : levels[static_cast<std::size_t>(k)]) {
      const std::vector<int> hm = h.members();
      for (int cand = 1; cand < g.order(); ++cand) {
        if (h.contains(cand)) continue;
        // <H, cand> has order exactly 2|H| iff cand^2 in H and cand normalizes H.
        if (!h.contains(g.op(cand, cand))) continue;
        const int inv = g.inverse(cand);
        bool stable = true;
        for (int m : hm) {
          if (!h.contains(g.op(g.op(cand, m), inv))) {
            stable = false;
            break;
          }
        }
        if (!stable) continue;
        SubgroupSet grown = h;
        for (int m : hm) grown.add(g.op(cand, m));
        next.insert(std::move(grown));
      }
    }
    auto& up = levels[static_cast<std::size_t>(k) + 1];
    up.assign(next.begin(), next.end());
    std::sort(up.begin(), up.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
      return a.words() < b.words();
    });
  }
  if (levels[static_cast<std::size_t>(n)].size() != 1)
    throw std::logic_error("lattice enumeration lost the whole group");
  return SubgroupLattice(g, std::move(levels));
}

inline std::vector<std::vector<std::vector<int>>> SubgroupLattice::covers() const {
  const GroupTable& g = *group_;
  const int n = top_level();
  std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(n));
  std::unordered_map<SubgroupSet, int, SubgroupSetHash> index;
  for (int k = 0; k < n; ++k) {
    index.clear();
    const auto& lower = levels_[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], static_cast<int>(i));
    out[static_cast<std::size_t>(k)].assign(lower.size(), {});
    const auto& upper = levels_[static_cast<std::size_t>(k) + 1];
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const std::vector<int> km = upper[j].members();
      const SubgroupSet phi = detail::frattini_of_members(g, km);
      const detail::CosetSpace cs = detail::coset_space(g, km, phi);
      const std::vector<int> pm = phi.members();
      for_each_subspace(cs.dim, cs.dim - 1, [&](const Gf2Subspace& hyper) {
        SubgroupSet maximal = phi;
        // Elements of the hyperplane's preimage: coset reps over the subspace.
        std::vector<std::uint64_t> pts = {0};
        for (std::uint64_t row : hyper.rows()) {
          const std::size_t sz = pts.size();
          for (std::size_t t = 0; t < sz; ++t) pts.push_back(pts[t] ^ row);
        }
        for (std::uint64_t v : pts)
          for (int p : pm) maximal.add(g.op(cs.rep[static_cast<std::size_t>(v)], p));
        const auto it = index.find(maximal);
        if (it == index.end()) throw std::logic_error("cover relation: missing maximal subgroup");
        out[static_cast<std::size_t>(k)][static_cast<std::size_t>(it->second)].push_back(
            static_cast<int>(j));
      });
    }
    for (auto& parents : out[static_cast<std::size_t>(k)])
      if (parents.empty()) throw std::logic_error("subgroup with no cover");
  }
  return out;
}

inline CensusTable census(const SubgroupLattice& lat) {
  CensusTable t;
  t.n = lat.top_level();
  t.s.resize(static_cast<std::size_t>(t.n) + 1);
  for (int k = 0; k <= t.n; ++k) t.s[static_cast<std::size_t>(k)] = lat.level(k).size();
  return t;
}

inline CensusTable oracle_census(const GroupTable& g, int order_cap = kDefaultOracleCap) {
  return census(enumerate_lattice(g, order_cap));
}

/// c[i] = number of cyclic subgroups of order 2^i; c[0] = 1. Works straight
/// from element orders, no lattice needed.
inline std::vector<std::int64_t> cyclic_census(const GroupTable& g) {
  std::unordered_set<SubgroupSet, SubgroupSetHash> seen;
  std::vector<std::int64_t> c(static_cast<std::size_t>(g.order_exponent()) + 1, 0);
  for (int x = 0; x < g.order(); ++x) {
    SubgroupSet s(g);
    int y = x;
    while (y != 0) {
      s.add(y);
      y = g.op(y, x);
    }
    if (seen.insert(std::move(s)).second)
      ++c[static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(g.element_order(x))))];
  }
  return c;
}

inline std::int64_t cyclic_subgroup_total(const GroupTable& g) {
  std::int64_t t = 0;
  for (std::int64_t c : cyclic_census(g)) t += c;
  return t;
}

/// e[i] = number of elementary abelian subgroups of order 2^i containing
/// Phi(G). Requires |Phi(G)| = 2. e[1] = 1 (Phi itself), e[0] = 0.
inline std::vector<std::int64_t> elementary_abelian_over_frattini(const SubgroupLattice& lat) {
  const GroupTable& g = lat.group();
  const SubgroupSet phi = g.frattini_subgroup();
  if (phi.size() != 2)
    throw std::invalid_argument("elementary_abelian_over_frattini: |Phi(G)| != 2");
  const int x = phi.members()[1];
  std::vector<std::int64_t> e(static_cast<std::size_t>(lat.top_level()) + 1, 0);
  for (int k = 1; k <= lat.top_level(); ++k)
    for (const SubgroupSet& h : lat.level(k)) {
      if (!h.contains(x)) continue;
      bool elementary = true;
      for (int m : h.members())
        if (g.element_order(m) > 2) {
          elementary = false;
          break;
        }
      if (elementary) ++e[static_cast<std::size_t>(k)];
    }
  return e;
}

/// Census of elementary abelian sections H2/H1, keyed by (alpha, beta) with
/// H2/H1 of rank alpha and |H1| = 2^beta. The four classes split a section by
/// how H1 and H2 sit against Phi(G); splitting requires |Phi(G)| = 2.
struct SectionCell {
  std::int64_t total = 0;
  std::int64_t s1 = 0, s2 = 0, s3 = 0, s4 = 0;
};

struct SectionCensus {
  bool split = false;
  std::map<std::pair<int, int>, SectionCell> cells;

  std::int64_t total(int alpha, int beta) const {
    const auto it = cells.find({alpha, beta});
    return it == cells.end() ? 0 : it->second.total;
  }
};

inline SectionCensus section_census(const SubgroupLattice& lat, bool split = false) {
  const GroupTable& g = lat.group();
  SectionCensus out;
  out.split = split;
  int phi_gen = -1;
  if (split) {
    const SubgroupSet phi = g.frattini_subgroup();
    if (phi.size() != 2) throw std::invalid_argument("section_census: split needs |Phi(G)| = 2");
    phi_gen = phi.members()[1];
  }
  // The sections below H2 are exactly the subgroups between Phi(H2) and H2:
  // those are normal in H2 with elementary abelian quotient, and every H1
  // with an elementary abelian H2/H1 contains Phi(H2).
  const bool check_directly = g.order() <= 64;
  for (int k2 = 0; k2 <= lat.top_level(); ++k2) {
    for (const SubgroupSet& h2 : lat.level(k2)) {
      const std::vector<int> h2m = h2.members();
      const SubgroupSet p = detail::frattini_of_members(g, h2m);
      const detail::CosetSpace cs = detail::coset_space(g, h2m, p);
      const std::vector<int> pm = p.members();
      for (int j = 0; j <= cs.dim; ++j) {
        const int alpha = cs.dim - j;
        for_each_subspace(cs.dim, j, [&](const Gf2Subspace& sub) {
          SubgroupSet h1 = p;
          std::vector<std::uint64_t> pts = {0};
          for (std::uint64_t row : sub.rows()) {
            const std::size_t sz = pts.size();
            for (std::size_t t = 0; t < sz; ++t) pts.push_back(pts[t] ^ row);
          }
          for (std::uint64_t v : pts)
            for (int pe : pm) h1.add(g.op(cs.rep[static_cast<std::size_t>(v)], pe));
          if (check_directly) {
            if (!h1.normal_in(h2)) throw std::logic_error("section census: H1 not normal in H2");
            for (int a : h2m) {
              if (!h1.contains(g.op(a, a)))
                throw std::logic_error("section census: quotient has an element of order > 2");
              for (int b : h2m)
                if (!h1.contains(g.commutator(a, b)))
                  throw std::logic_error("section census: quotient not abelian");
            }
          }
          const int beta = h1.order_exponent();
          SectionCell& cell = out.cells[{alpha, beta}];
          ++cell.total;
          if (split) {
            if (h1.contains(phi_gen))
              ++cell.s1;
            else if (h1.size() == 1)
              ++cell.s2;
            else if (!h2.contains(phi_gen))
              ++cell.s3;
            else
              ++cell.s4;
          }
        });
      }
    }
  }
  return out;
}

/// Structure checks for the lattice of an (almost) extraspecial group:
///  (i)   nontrivial normal subgroups = subgroups containing Phi(G);
///  (ii)  every other nontrivial subgroup is elementary abelian and
///        complements Phi in H*Phi, with exactly 2^i complements inside each
///        elementary abelian overgroup of order 2^{i+1};
///  (iii) non-normal H, K are conjugate iff H*Phi = K*Phi, and a conjugating
///        coset of N_G(H) mapping H into K is unique when it exists.
struct FrattiniDichotomyReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::int64_t normal_count = 0;
  std::int64_t complement_count = 0;

  void fail(std::string msg) {
    pass = false;
    if (failures.size() < 16) failures.push_back(std::move(msg));
  }
};

inline FrattiniDichotomyReport verify_frattini_dichotomy(const GroupTable& g,
                                                         int order_cap = kDefaultOracleCap) {
  const Classification cls = g.classify();
  if (!cls.is_extraspecial && !cls.is_almost_extraspecial)
    throw std::invalid_argument("verify_frattini_dichotomy: group is not (almost) extraspecial");
  const SubgroupLattice lat = enumerate_lattice(g, order_cap);
  const SubgroupSet phi = g.frattini_subgroup();
  const int x = phi.members()[1];

  FrattiniDichotomyReport rep;
  std::unordered_map<SubgroupSet, std::int64_t, SubgroupSetHash> complements_in;
  std::vector<const SubgroupSet*> non_normal;

  for (int k = 1; k <= lat.top_level(); ++k) {
    for (const SubgroupSet& h : lat.level(k)) {
      const bool over_phi = h.contains(x);
      const bool normal = h.normal_in_parent();
      if (over_phi != normal)
        rep.fail("subgroup of order 2^" + std::to_string(k) +
                 (over_phi ? " contains Phi but is not normal" : " is normal without containing Phi"));
      if (over_phi) {
        ++rep.normal_count;
        continue;
      }
      ++rep.complement_count;
      non_normal.push_back(&h);
      for (int m : h.members())
        if (g.element_order(m) > 2) {
          rep.fail("non-normal subgroup is not elementary abelian");
          break;
        }
      SubgroupSet hphi = h;
      for (int m : h.members()) hphi.add(g.op(m, x));
      if (hphi.size() != 2 * h.size()) rep.fail("H*Phi does not have order 2|H|");
      ++complements_in[hphi];
    }
  }

  // (ii) complement counts per elementary abelian overgroup of Phi.
  for (int k = 2; k <= lat.top_level(); ++k) {
    for (const SubgroupSet& kk : lat.level(k)) {
      if (!kk.contains(x)) continue;
      bool elementary = true;
      for (int m : kk.members())
        if (g.element_order(m) > 2) {
          elementary = false;
          break;
        }
      if (!elementary) continue;
      const auto it = complements_in.find(kk);
      const std::int64_t found = it == complements_in.end() ? 0 : it->second;
      if (found != (std::int64_t{1} << (k - 1)))
        rep.fail("elementary abelian overgroup of order 2^" + std::to_string(k) + " has " +
                 std::to_string(found) + " complements of Phi, expected 2^" + std::to_string(k - 1));
    }
  }

  // (iii) conjugacy of non-normal subgroups matches the H*Phi fibers.
  for (std::size_t i = 0; i < non_normal.size(); ++i) {
    for (std::size_t j = i + 1; j < non_normal.size(); ++j) {
      const SubgroupSet &h = *non_normal[i], &k = *non_normal[j];
      if (h.size() != k.size()) continue;
      SubgroupSet hphi = h, kphi = k;
      for (int m : h.members()) hphi.add(g.op(m, x));
      for (int m : k.members()) kphi.add(g.op(m, x));
      bool conjugate = false;
      for (int c = 0; c < g.order() && !conjugate; ++c) {
        bool all = true;
        for (int m : h.members())
          if (!k.contains(g.conjugate(m, c))) {
            all = false;
            break;
          }
        conjugate = all;
      }
      if (conjugate != (hphi == kphi))
        rep.fail(conjugate ? "conjugate subgroups with different H*Phi"
                           : "subgroups with equal H*Phi are not conjugate");
    }
  }

  // Uniqueness of the conjugating coset representative of N_G(H).
  for (const SubgroupSet* hp : non_normal) {
    const SubgroupSet& h = *hp;
    const std::vector<int> hm = h.members();
    SubgroupSet normalizer(g);
    for (int c = 0; c < g.order(); ++c) {
      bool stable = true;
      for (int m : hm)
        if (!h.contains(g.conjugate(m, c))) {
          stable = false;
          break;
        }
      if (stable) normalizer.add(c);
    }
    std::vector<int> reps;
    {
      SubgroupSet covered(g);
      const std::vector<int> nm = normalizer.members();
      for (int c = 0; c < g.order(); ++c) {
        if (covered.contains(c)) continue;
        reps.push_back(c);
        for (int m : nm) covered.add(g.op(c, m));
      }
    }
    for (const SubgroupSet* kp : non_normal) {
      const SubgroupSet& k = *kp;
      if (k.size() < h.size()) continue;
      int hits = 0;
      for (int c : reps) {
        bool inside = true;
        for (int m : hm)
          if (!k.contains(g.conjugate(m, c))) {
            inside = false;
            break;
          }
        if (inside) ++hits;
      }
      if (hits > 1) {
        rep.fail("two cosets of the normalizer map H into the same K");
        break;
      }
    }
  }
  return rep;
}

}  // namespace subcensus
