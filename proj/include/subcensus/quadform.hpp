#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subcensus/biguint.hpp"
#include "subcensus/gf2linalg.hpp"
#include "subcensus/grouptable.hpp"

namespace subcensus {

inline constexpr int kMaxFormDim = 24;

/// Quadratic form q : F_2^m -> F_2 as an upper-triangular coefficient matrix,
/// q(v) = sum_{i<=j} a_ij v_i v_j. The polar form B(u,v) = q(u+v)+q(u)+q(v)
/// is the associated alternating bilinear form.
class QuadraticForm {
 public:
  QuadraticForm(int dim, std::vector<std::uint32_t> upper_rows)
      : dim_(dim), rows_(std::move(upper_rows)) {
    if (dim < 0 || dim > kMaxFormDim) throw std::invalid_argument("form dimension out of range");
    if (rows_.size() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("row count does not match dimension");
    for (int i = 0; i < dim_; ++i) {
      const std::uint32_t low = rows_[static_cast<std::size_t>(i)] & ((std::uint32_t{1} << i) - 1);
      if (low) throw std::invalid_argument("coefficient matrix is not upper triangular");
      if (dim_ < 32 && (rows_[static_cast<std::size_t>(i)] >> dim_))
        throw std::invalid_argument("coefficients beyond the dimension");
    }
    polar_.assign(static_cast<std::size_t>(dim_), 0);
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        if (rows_[static_cast<std::size_t>(i)] >> j & 1) {
          polar_[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
          polar_[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
        }
  }

  int dim() const { return dim_; }
  const std::vector<std::uint32_t>& upper_rows() const { return rows_; }

  int eval(std::uint32_t v) const {
    std::uint32_t acc = 0;
    std::uint32_t rest = v;
    while (rest) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      acc ^= static_cast<std::uint32_t>(std::popcount(rows_[static_cast<std::size_t>(i)] & v));
    }
    return static_cast<int>(acc & 1);
  }

  int polar(std::uint32_t u, std::uint32_t v) const {
    std::uint32_t acc = 0;
    while (u) {
      const int i = std::countr_zero(u);
      u &= u - 1;
      acc ^= static_cast<std::uint32_t>(std::popcount(polar_[static_cast<std::size_t>(i)] & v));
    }
    return static_cast<int>(acc & 1);
  }

  /// Row mask of the polar form: parity(polar_mask(u) & v) == B(u, v).
  std::uint32_t polar_mask(std::uint32_t u) const {
    std::uint32_t mask = 0;
    while (u) {
      const int i = std::countr_zero(u);
      u &= u - 1;
      mask ^= polar_[static_cast<std::size_t>(i)];
    }
    return mask;
  }

  /// RREF basis of the radical {v : B(v, .) = 0}.
  std::vector<std::uint32_t> radical_basis() const {
    // Kernel of the symmetric polar matrix by column elimination.
    std::vector<std::uint32_t> mat(polar_.begin(), polar_.end());
    std::vector<int> pivot_of_col(static_cast<std::size_t>(dim_), -1);
    int rank = 0;
    for (int c = 0; c < dim_; ++c) {
      int pr = -1;
      for (int r = rank; r < dim_; ++r)
        if (mat[static_cast<std::size_t>(r)] >> c & 1) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(mat[static_cast<std::size_t>(pr)], mat[static_cast<std::size_t>(rank)]);
      for (int r = 0; r < dim_; ++r)
        if (r != rank && (mat[static_cast<std::size_t>(r)] >> c & 1))
          mat[static_cast<std::size_t>(r)] ^= mat[static_cast<std::size_t>(rank)];
      pivot_of_col[static_cast<std::size_t>(c)] = rank;
      ++rank;
    }
    std::vector<std::uint32_t> kernel;
    for (int c = 0; c < dim_; ++c) {
      if (pivot_of_col[static_cast<std::size_t>(c)] >= 0) continue;
      std::uint32_t v = std::uint32_t{1} << c;
      for (int c2 = 0; c2 < dim_; ++c2) {
        const int p = pivot_of_col[static_cast<std::size_t>(c2)];
        if (p >= 0 && (mat[static_cast<std::size_t>(p)] >> c & 1)) v |= std::uint32_t{1} << c2;
      }
      kernel.push_back(v);
    }
    return kernel;
  }

  /// Builds a form from point evaluations, verifying the function really is
  /// quadratic (degree <= 2) by exhaustive re-evaluation.
  static QuadraticForm from_values(int dim, const std::function<int(std::uint32_t)>& f) {
    if (dim < 0 || dim > 20) throw std::invalid_argument("from_values: dimension too large");
    if (f(0) != 0) throw std::invalid_argument("from_values: q(0) != 0");
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i) {
      if (f(std::uint32_t{1} << i)) rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << i;
      for (int j = i + 1; j < dim; ++j) {
        const int b = f((std::uint32_t{1} << i) | (std::uint32_t{1} << j)) ^
                      f(std::uint32_t{1} << i) ^ f(std::uint32_t{1} << j);
        if (b) rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
      }
    }
    QuadraticForm q(dim, std::move(rows));
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << dim); ++v)
      if (q.eval(v) != f(v))
        throw std::invalid_argument("from_values: function is not quadratic");
    return q;
  }

 private:
  int dim_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> polar_;
};

/// Isometry type of the forms arising from the census group families:
/// `kind` describes the non-radical part (hyperbolic sum, hyperbolic sum with
/// one anisotropic plane, or symplectic-with-defect from a central C4) and
/// `rad_rank` counts radical coordinates where q vanishes.
struct FormType {
  enum class Kind { kPlus, kMinus, kAlmost };
  Kind kind = Kind::kPlus;
  int r = 0;
  int rad_rank = 0;

  static FormType plus(int r, int rad_rank = 0) { return {Kind::kPlus, r, rad_rank}; }
  static FormType minus(int r, int rad_rank = 0) { return {Kind::kMinus, r, rad_rank}; }
  static FormType almost(int r, int rad_rank = 0) { return {Kind::kAlmost, r, rad_rank}; }

  int dim() const { return 2 * r + (kind == Kind::kAlmost ? 1 : 0) + rad_rank; }
  friend bool operator==(const FormType&, const FormType&) = default;

  std::string to_string() const {
    std::string base;
    switch (kind) {
      case Kind::kPlus: base = "plus(" + std::to_string(r) + ")"; break;
      case Kind::kMinus: base = "minus(" + std::to_string(r) + ")"; break;
      case Kind::kAlmost: base = "almost(" + std::to_string(r) + ")"; break;
    }
    if (rad_rank) base += " + rad(" + std::to_string(rad_rank) + ")";
    return base;
  }
};

struct FormClassifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Standard coefficient matrix for a form type: hyperbolic planes x_{2i}x_{2i+1},
/// an anisotropic plane x^2+xy+y^2 for the minus type, one defective radical
/// coordinate with q = 1 for the almost type, then zero radical coordinates.
inline QuadraticForm standard_form(FormType t) {
  if (t.r < 0 || t.rad_rank < 0 || (t.kind == FormType::Kind::kMinus && t.r < 1))
    throw std::invalid_argument("standard_form: bad parameters");
  const int m = t.dim();
  if (m > kMaxFormDim)
    throw std::invalid_argument("standard_form: dimension above " + std::to_string(kMaxFormDim) +
                                ", use the closed-form counter");
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < t.r; ++i) rows[static_cast<std::size_t>(2 * i)] |= std::uint32_t{1} << (2 * i + 1);
  if (t.kind == FormType::Kind::kMinus) {
    rows[static_cast<std::size_t>(2 * t.r - 2)] |= std::uint32_t{1} << (2 * t.r - 2);
    rows[static_cast<std::size_t>(2 * t.r - 1)] |= std::uint32_t{1} << (2 * t.r - 1);
  }
  if (t.kind == FormType::Kind::kAlmost)
    rows[static_cast<std::size_t>(2 * t.r)] |= std::uint32_t{1} << (2 * t.r);
  return QuadraticForm(m, std::move(rows));
}

/// The squaring form of a group with |Phi(G)| = 2 and Phi(G) central:
/// on G/Phi(G), q(v) = 1 iff lifts of v square to the generator of Phi(G).
/// Its polar form is the commutator pairing, which is verified exhaustively.
inline QuadraticForm form_of_group(const GroupTable& g) {
  const SubgroupSet phi = g.frattini_subgroup();
  if (phi.size() != 2) throw std::invalid_argument("form_of_group: |Phi(G)| != 2");
  const int x = phi.members()[1];
  for (int a = 0; a < g.order(); ++a)
    if (g.op(a, x) != g.op(x, a))
      throw std::invalid_argument("form_of_group: Phi(G) is not central");

  const int m = g.order_exponent() - 1;
  // Coset representatives of Phi indexed by coordinates over a greedy basis.
  std::vector<int> rep = {0};
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  covered[0] = covered[static_cast<std::size_t>(x)] = 1;
  std::vector<int> basis;
  for (int cand = 1; cand < g.order() && static_cast<int>(basis.size()) < m; ++cand) {
    if (covered[static_cast<std::size_t>(cand)]) continue;
    basis.push_back(cand);
    const std::size_t half = rep.size();
    for (std::size_t v = 0; v < half; ++v) {
      const int e = g.op(rep[v], cand);
      rep.push_back(e);
      covered[static_cast<std::size_t>(e)] = 1;
      covered[static_cast<std::size_t>(g.op(e, x))] = 1;
    }
  }
  if (rep.size() != std::size_t{1} << m)
    throw std::logic_error("form_of_group: coset space has wrong size");

  auto square_bit = [&](std::uint32_t v) -> int {
    const int e = rep[v];
    const int sq = g.op(e, e);
    if (sq == 0) return 0;
    if (sq == x) return 1;
    throw std::invalid_argument("form_of_group: squares do not land in Phi(G)");
  };
  // Well-definedness across the two lifts of each coset.
  for (std::uint32_t v = 0; v < rep.size(); ++v) {
    const int other = g.op(rep[v], x);
    const int sq = g.op(other, other);
    if ((sq == x ? 1 : 0) != square_bit(v))
      throw std::logic_error("form_of_group: value depends on the coset representative");
  }
  QuadraticForm q = QuadraticForm::from_values(m, square_bit);
  // Polar form must be the commutator pairing.
  for (std::uint32_t u = 0; u < rep.size(); ++u)
    for (std::uint32_t v = 0; v < rep.size(); ++v) {
      const int c = g.commutator(rep[u], rep[v]);
      if (q.polar(u, v) != (c == 0 ? 0 : 1))
        throw std::logic_error("form_of_group: polar form differs from the commutator pairing");
    }
  return q;
}

/// Counts of totally singular subspaces of dimension 0..max_d, by pruned DFS
/// over canonical RREF bases: each new row is singular, orthogonal to the
/// current span under the polar form, and extends the basis canonically, so
/// every totally singular subspace is visited exactly once.
inline std::vector<BigUint> count_totally_singular_up_to(const QuadraticForm& q, int max_d,
                                                         int dim_cap = kDefaultEnumDimCap) {
  if (q.dim() > dim_cap)
    throw std::invalid_argument("count_totally_singular: dimension above enumerative cap");
  if (max_d < 0) throw std::invalid_argument("count_totally_singular: negative dimension");
  max_d = std::min(max_d, q.dim());
  std::vector<BigUint> counts(static_cast<std::size_t>(max_d) + 1);
  counts[0] = 1;
  if (max_d == 0) return counts;

  const std::uint32_t space = std::uint32_t{1} << q.dim();
  std::vector<std::uint32_t> rows, ortho;  // ortho[i] = polar mask of rows[i]
  std::uint32_t pivot_mask = 0;

  auto extend = [&](auto&& self, int depth, std::uint32_t start_step) -> void {
    for (std::uint32_t v = start_step; v < space; v += start_step) {
      if (v & pivot_mask) continue;  // rows must stay clean at the new pivot
      bool ok = true;
      for (std::uint32_t r : rows)
        if (r & (v & -v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (std::uint32_t o : ortho)
        if (std::popcount(o & v) & 1) {
          ok = false;
          break;
        }
      if (!ok || q.eval(v) != 0) continue;
      counts[static_cast<std::size_t>(depth)] += 1;
      if (depth < max_d) {
        const std::uint32_t pivot = v & -v;
        rows.push_back(v);
        ortho.push_back(q.polar_mask(v));
        pivot_mask |= pivot;
        self(self, depth + 1, pivot << 1);
        pivot_mask &= ~pivot;
        ortho.pop_back();
        rows.pop_back();
      }
    }
  };
  extend(extend, 1, 1);
  return counts;
}

namespace detail {

/// Totally singular d-subspace count of the non-radical part of a form type.
inline BigUint count_ts_core(FormType::Kind kind, int r, int d) {
  if (d == 0) return 1;
  switch (kind) {
    case FormType::Kind::kPlus: {
      BigUint c = gaussian_binomial(r, d);
      if (c.is_zero()) return c;
      for (int i = 0; i < d; ++i) c *= BigUint::pow2(static_cast<unsigned>(r - 1 - i)) + BigUint(1);
      return c;
    }
    case FormType::Kind::kMinus: {
      BigUint c = gaussian_binomial(r - 1, d);
      if (c.is_zero()) return c;
      for (int i = 0; i < d; ++i) c *= BigUint::pow2(static_cast<unsigned>(r - i)) + BigUint(1);
      return c;
    }
    case FormType::Kind::kAlmost: {
      // Totally singular subspaces biject with the isotropic subspaces of the
      // symplectic part: the defective coordinate forces the unique lift.
      BigUint c = gaussian_binomial(r, d);
      if (c.is_zero()) return c;
      for (int i = 0; i < d; ++i) c *= BigUint::pow2(static_cast<unsigned>(r - i)) + BigUint(1);
      return c;
    }
  }
  return {};
}

}  // namespace detail

/// Closed-form count of totally singular d-subspaces for a standard type.
/// A subspace splits along the zero radical: s dimensions inside it, d-s
/// projecting to the core, glued by any of 2^{(d-s)(m0-s)} linear maps.
inline BigUint count_totally_singular(FormType t, int d) {
  if (d < 0) throw std::invalid_argument("count_totally_singular: negative dimension");
  if (t.r < 0 || t.rad_rank < 0 || (t.kind == FormType::Kind::kMinus && t.r < 1))
    throw std::invalid_argument("count_totally_singular: bad form type");
  if (d > t.dim()) return {};
  BigUint total;
  for (int s = 0; s <= std::min(d, t.rad_rank); ++s) {
    const BigUint choose_rad = gaussian_binomial(t.rad_rank, s);
    if (choose_rad.is_zero()) continue;
    const BigUint core = detail::count_ts_core(t.kind, t.r, d - s);
    if (core.is_zero()) continue;
    total += choose_rad * core *
             BigUint::pow2(static_cast<unsigned>((d - s) * (t.rad_rank - s)));
  }
  return total;
}

inline BigUint count_totally_singular(const QuadraticForm& q, int d,
                                      int dim_cap = kDefaultEnumDimCap) {
  if (d < 0) throw std::invalid_argument("count_totally_singular: negative dimension");
  if (d > q.dim()) return {};
  return count_totally_singular_up_to(q, d, dim_cap)[static_cast<std::size_t>(d)];
}

/// Recovers the standard type of a form: radical rank, the q-restriction on
/// the radical, and the dichotomy of the nondegenerate part read off from its
/// singular-vector count (2^{2r-1} +- 2^{r-1}). A form whose q is nonzero on
/// a radical of dimension >= 2 does not arise from the supported families and
/// is rejected.
inline FormType arf_classify(const QuadraticForm& q) {
  const std::vector<std::uint32_t> radical = q.radical_basis();
  const int rho = static_cast<int>(radical.size());
  bool q_on_radical = false;
  for (std::uint32_t v : radical) q_on_radical = q_on_radical || q.eval(v) != 0;

  if (q_on_radical && rho >= 2)
    throw FormClassifyError("form is nonzero on a radical of dimension >= 2");

  const int nondeg = q.dim() - rho;
  if (nondeg % 2 != 0) throw std::logic_error("nondegenerate part of odd dimension");
  const int r = nondeg / 2;

  std::uint64_t singular = 0;
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << q.dim()); ++v)
    if (q.eval(v) == 0) ++singular;

  if (q_on_radical) {
    // rho == 1 here; the defective line makes exactly half the space singular.
    if (singular != std::uint64_t{1} << (q.dim() - 1))
      throw std::logic_error("defective form with unexpected singular count");
    return FormType::almost(r, 0);
  }
  const std::uint64_t scaled = singular >> rho;  // singular count of the core
  const std::uint64_t mid = r == 0 ? 1 : std::uint64_t{1} << (2 * r - 1);
  const std::uint64_t half = r == 0 ? 0 : std::uint64_t{1} << (r - 1);
  if (scaled == mid + half || r == 0) return FormType::plus(r, rho);
  if (scaled == mid - half) return FormType::minus(r, rho);
  throw std::logic_error("singular count matches neither dichotomy class");
}

}  // namespace subcensus
