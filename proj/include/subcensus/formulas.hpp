#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "subcensus/biguint.hpp"
#include "subcensus/gf2linalg.hpp"
#include "subcensus/oracle.hpp"
#include "subcensus/quadform.hpp"

namespace subcensus {

/// The two reference product families with closed-form censuses:
/// D8 x C2^{n-3} and (C4 x C2) x C2^{n-3}.
enum class ProductFamily { kD8, kC4C2 };

/// Four-term closed form for s_k of the family group of order 2^n.
/// Each term is guarded by its Gaussian binomial so the power-of-two factors
/// are only formed when the exponents are nonnegative; the C4C2 middle term
/// is evaluated in the expanded shape 2^{2n-2k-2} + 2^{n-k}, which is
/// integral at k = n-1 where the factored shape is not.
inline BigUint sk_closed_form(ProductFamily family, int n, int k) {
  if (n < 3) throw std::invalid_argument("sk_closed_form: n must be at least 3");
  if (k < 0 || k > n) throw std::invalid_argument("sk_closed_form: k out of range");
  const auto uk = [](int e) { return static_cast<unsigned>(e); };

  BigUint total = gaussian_binomial(n - 3, k);
  if (const BigUint b = gaussian_binomial(n - 3, k - 1); !b.is_zero())
    total += BigUint(family == ProductFamily::kD8 ? 5 : 3) * (b << uk(n - k - 2));
  if (const BigUint b = gaussian_binomial(n - 3, k - 2); !b.is_zero()) {
    if (family == ProductFamily::kD8)
      total += (b << uk(2 * n - 2 * k - 1)) + (b << uk(n - k - 1));
    else
      total += (b << uk(2 * n - 2 * k - 2)) + (b << uk(n - k));
  }
  if (const BigUint b = gaussian_binomial(n - 3, k - 3); !b.is_zero())
    total += b << uk(2 * n - 2 * k);
  return total;
}

inline CensusTable census_from_formula(ProductFamily family, int n) {
  CensusTable t;
  t.n = n;
  t.s.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) t.s.push_back(sk_closed_form(family, n, k));
  return t;
}

/// Per-case subgroup counts for (C4 x C2) x C2^{n-3}, split by which subgroup
/// of C4 x C2 the left projection A2 is: a) trivial, b) one of the three of
/// order 2, c) one of the two cyclic of order 4, d) the Klein subgroup,
/// e) the whole of C4 x C2. Cases sum to the closed form.
enum class C4C2Case { kA, kB, kC, kD, kE };

inline BigUint case_term(C4C2Case c, int n, int k) {
  if (n < 3) throw std::invalid_argument("case_term: n must be at least 3");
  const auto uk = [](int e) { return static_cast<unsigned>(e); };
  switch (c) {
    case C4C2Case::kA:
      return gaussian_binomial(n - 3, k);
    case C4C2Case::kB: {
      const BigUint b = gaussian_binomial(n - 3, k - 1);
      return b.is_zero() ? b : BigUint(3) * (b << uk(n - k - 2));
    }
    case C4C2Case::kC: {
      const BigUint b = gaussian_binomial(n - 3, k - 2);
      return b.is_zero() ? b : b << uk(n - k);
    }
    case C4C2Case::kD: {
      const BigUint b = gaussian_binomial(n - 3, k - 2);
      return b.is_zero() ? b : b << uk(2 * n - 2 * k - 2);
    }
    case C4C2Case::kE: {
      const BigUint b = gaussian_binomial(n - 3, k - 3);
      return b.is_zero() ? b : b << uk(2 * n - 2 * k);
    }
  }
  return {};
}

/// Lattice size of an (almost) extraspecial group of order 2^{2r+1} (almost:
/// 2^{2r+2}) from its counts e[i] of elementary abelian subgroups of order
/// 2^i containing Phi: 1 + sum_i binom(dim, i)_2 + sum_{i=1..r} e[i+1] 2^i.
inline BigUint lattice_size_extraspecial(int r, const std::vector<BigUint>& e, bool almost) {
  if (r < 1) throw std::invalid_argument("lattice_size_extraspecial: r must be positive");
  const int dim = 2 * r + (almost ? 1 : 0);
  BigUint total = 1;
  for (int i = 0; i <= dim; ++i) total += gaussian_binomial(dim, i);
  for (int i = 1; i <= r; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i) + 1;
    if (idx < e.size() && !e[idx].is_zero()) total += e[idx] << static_cast<unsigned>(i);
  }
  return total;
}

/// e[i] profile (by semantic index i) from a standard form type: e[i] is the
/// totally singular (i-1)-subspace count; e[1] = 1 and e[0] = 0 always.
inline std::vector<BigUint> e_profile(FormType t, int up_to) {
  std::vector<BigUint> e(static_cast<std::size_t>(up_to) + 1);
  for (int i = 1; i <= up_to; ++i) e[static_cast<std::size_t>(i)] = count_totally_singular(t, i - 1);
  return e;
}

inline std::vector<BigUint> e_profile(const SubgroupLattice& lat) {
  const std::vector<std::int64_t> raw = elementary_abelian_over_frattini(lat);
  std::vector<BigUint> e(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) e[i] = static_cast<std::uint64_t>(raw[i]);
  return e;
}

/// Per-class counts of elementary abelian sections at (alpha, beta) for a
/// group of order 2^n with |Phi| = 2 central, given its e[i] profile:
///   S1: Phi <= H1 — nested subspace pairs of G/Phi = C2^{n-1};
///   S2: H1 = 1 — only possible at beta = 0, the elementary abelian count;
///   S3: Phi not<= H2 — H2 complements Phi inside the elementary abelian
///       H2*Phi, H1 = H2 ∩ H1*Phi, giving e[a+b+1] binom(a+b, b)_2 2^{a+b};
///   S4: Phi <= H2 but not H1 — H2 elementary abelian over Phi, H1 a
///       subspace avoiding the Phi line: e[a+b] binom(a+b-1, b)_2 2^b.
struct SectionFormulaCounts {
  BigUint s1, s2, s3, s4;
  BigUint total() const { return s1 + s2 + s3 + s4; }
};

inline SectionFormulaCounts section_census_formulas(const std::vector<BigUint>& e, int n,
                                                    int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("section indices must be nonnegative");
  const auto e_at = [&](int i) -> BigUint {
    if (i < 0 || static_cast<std::size_t>(i) >= e.size()) return {};
    return e[static_cast<std::size_t>(i)];
  };
  SectionFormulaCounts out;
  out.s1 = gaussian_binomial(n - 1, beta - 1) * gaussian_binomial(n - beta, alpha);
  if (beta == 0) {
    out.s2 = e_at(alpha) + (e_at(alpha + 1) << static_cast<unsigned>(alpha));
  } else {
    out.s3 = e_at(alpha + beta + 1) * gaussian_binomial(alpha + beta, beta)
             << static_cast<unsigned>(alpha + beta);
    out.s4 = e_at(alpha + beta) * gaussian_binomial(alpha + beta - 1, beta)
             << static_cast<unsigned>(beta);
  }
  return out;
}

/// Subgroup counting for A x C2^m through quintuples: a subgroup of order 2^k
/// projects to a section A2/A1 of A that must be elementary abelian of some
/// rank alpha to admit an isomorphism onto a section of C2^m, paired with a
/// flag B1 <= B2 of subspaces and one of |GL(alpha, 2)| isomorphisms.
struct GoursatCountInput {
  SectionCensus sections;  // complete elementary abelian section census of A
  int m = 0;               // rank of the elementary abelian right factor
  int q_exp = 0;           // order exponent of A
};

inline GoursatCountInput goursat_input(const GroupTable& a, int m,
                                       int oracle_cap = kDefaultOracleCap) {
  return GoursatCountInput{section_census(enumerate_lattice(a, oracle_cap)), m,
                           a.order_exponent()};
}

inline BigUint goursat_count(const GoursatCountInput& in, int k) {
  if (k < 0 || k > in.q_exp + in.m)
    throw std::invalid_argument("goursat_count: k out of range");
  BigUint total;
  for (const auto& [ab, cell] : in.sections.cells) {
    const auto [alpha, beta] = ab;
    const int b1 = k - alpha - beta;
    if (b1 < 0 || b1 + alpha > in.m) continue;
    total += BigUint(static_cast<std::uint64_t>(cell.total)) * gl2_order(alpha) *
             gaussian_binomial(in.m, b1) * gaussian_binomial(in.m - b1, alpha);
  }
  return total;
}

inline CensusTable census_from_goursat(const GoursatCountInput& in) {
  CensusTable t;
  t.n = in.q_exp + in.m;
  t.s.reserve(static_cast<std::size_t>(t.n) + 1);
  for (int k = 0; k <= t.n; ++k) t.s.push_back(goursat_count(in, k));
  return t;
}

/// Pointwise comparison of two censuses of the same order.
struct DominanceResult {
  bool dominated = true;
  int first_violation = -1;
};

inline DominanceResult dominance_check(const CensusTable& left, const CensusTable& right) {
  if (left.n != right.n) throw std::invalid_argument("dominance_check: mismatched group orders");
  for (int k = 0; k <= left.n; ++k)
    if (left.s[static_cast<std::size_t>(k)] > right.s[static_cast<std::size_t>(k)])
      return {false, k};
  return {true, -1};
}

}  // namespace subcensus
