#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subcensus/biguint.hpp"

namespace subcensus {

inline constexpr int kMaxBitVecWidth = 64;
/// Subspace enumeration explodes combinatorially; reject ambient dimensions
/// past this unless the caller raises the cap explicitly.
inline constexpr int kDefaultEnumDimCap = 24;

/// Vector in F_2^width. Coordinate i lives in bit i; bits past `width` are zero.
struct BitVec {
  int width = 0;
  std::uint64_t bits = 0;

  BitVec() = default;
  BitVec(int w, std::uint64_t b) : width(w), bits(b) {
    if (w < 0 || w > kMaxBitVecWidth) throw std::invalid_argument("BitVec width out of range");
    if (w < 64 && (b >> w) != 0) throw std::invalid_argument("BitVec has bits beyond its width");
  }

  int get(int i) const { return static_cast<int>(bits >> i & 1); }
  friend bool operator==(const BitVec&, const BitVec&) = default;
};

/// Subspace of F_2^m held as a reduced-row-echelon basis. Rows are kept with
/// strictly increasing pivot (lowest set bit), and every pivot column has a
/// single 1 across the basis, so equal subspaces have bit-identical bases.
class Gf2Subspace {
 public:
  explicit Gf2Subspace(int ambient_dim) : ambient_(ambient_dim) {
    if (ambient_dim < 0 || ambient_dim > kMaxBitVecWidth)
      throw std::invalid_argument("ambient dimension out of range");
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  /// Canonical representative of v modulo the subspace.
  std::uint64_t reduce(std::uint64_t v) const {
    for (std::uint64_t r : rows_)
      if (v >> std::countr_zero(r) & 1) v ^= r;
    return v;
  }

  bool contains(std::uint64_t v) const { return reduce(v) == 0; }

  bool contains(const Gf2Subspace& other) const {
    for (std::uint64_t r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  /// Adds v to the span, restoring RREF. Returns false if v was already in.
  bool insert(std::uint64_t v) {
    if (ambient_ < 64 && (v >> ambient_) != 0)
      throw std::invalid_argument("vector has bits beyond the ambient dimension");
    v = reduce(v);
    if (v == 0) return false;
    const int p = std::countr_zero(v);
    for (std::uint64_t& r : rows_)
      if (r >> p & 1) r ^= v;
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](std::uint64_t r) {
      return std::countr_zero(r) > p;
    });
    rows_.insert(pos, v);
    return true;
  }

  friend bool operator==(const Gf2Subspace&, const Gf2Subspace&) = default;

  /// For enumeration code that produces rows already in RREF order.
  static Gf2Subspace from_rref(int ambient_dim, std::vector<std::uint64_t> rows) {
    Gf2Subspace s(ambient_dim);
    s.rows_ = std::move(rows);
    return s;
  }

 private:
  int ambient_;
  std::vector<std::uint64_t> rows_;
};

/// Span of a list of vectors as a canonical RREF basis. Idempotent.
inline Gf2Subspace rref(int ambient_dim, const std::vector<std::uint64_t>& vectors) {
  Gf2Subspace s(ambient_dim);
  for (std::uint64_t v : vectors) s.insert(v);
  return s;
}

inline Gf2Subspace rref(const std::vector<BitVec>& vectors) {
  if (vectors.empty()) return Gf2Subspace(0);
  const int w = vectors.front().width;
  Gf2Subspace s(w);
  for (const BitVec& v : vectors) {
    if (v.width != w) throw std::invalid_argument("rref: mixed vector widths");
    s.insert(v.bits);
  }
  return s;
}

/// Number of k-dimensional subspaces of F_2^n. Zero outside 0 <= k <= n, so
/// census formulas with shifted indices evaluate uniformly.
inline BigUint gaussian_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("gaussian_binomial: n must be nonnegative");
  if (k < 0 || k > n) return {};
  // q-Pascal recurrence at q = 2, one row at a time.
  std::vector<BigUint> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] <<= static_cast<unsigned>(j);
      row[j] += row[j - 1];
    }
  return row[k];
}

/// |GL(alpha, 2)| = prod_{i<alpha} (2^alpha - 2^i).
inline BigUint gl2_order(int alpha) {
  if (alpha < 0) throw std::invalid_argument("gl2_order: alpha must be nonnegative");
  BigUint r = 1;
  for (int i = 0; i < alpha; ++i)
    r *= BigUint::pow2(static_cast<unsigned>(alpha)) - BigUint::pow2(static_cast<unsigned>(i));
  return r;
}

/// Visits every k-dimensional subspace of F_2^m exactly once, in canonical
/// RREF form. The total number of visits equals gaussian_binomial(m, k).
template <typename Fn>
void for_each_subspace(int m, int k, Fn&& fn, int dim_cap = kDefaultEnumDimCap) {
  if (dim_cap > kMaxBitVecWidth) throw std::invalid_argument("enumeration cap above bit width");
  if (m < 0 || m > dim_cap)
    throw std::invalid_argument("for_each_subspace: ambient dimension above enumeration cap");
  if (k < 0 || k > m) throw std::invalid_argument("for_each_subspace: k out of range");

  std::vector<int> pivots(static_cast<std::size_t>(k));
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k));

  // Fill row i with its pivot bit plus any subset of its free columns
  // (columns right of the pivot that are not pivots themselves).
  auto fill_rows = [&](auto&& self, int i) -> void {
    if (i == k) {
      fn(static_cast<const Gf2Subspace&>(Gf2Subspace::from_rref(m, rows)));
      return;
    }
    std::uint64_t free_mask = 0;
    for (int c = pivots[i] + 1; c < m; ++c) free_mask |= std::uint64_t{1} << c;
    for (int j = 0; j < k; ++j) free_mask &= ~(std::uint64_t{1} << pivots[j]);
    const std::uint64_t base = std::uint64_t{1} << pivots[i];
    std::uint64_t sub = 0;
    do {
      rows[i] = base | sub;
      self(self, i + 1);
      sub = (sub - free_mask) & free_mask;
    } while (sub != 0);
  };

  auto choose_pivots = [&](auto&& self, int idx, int from) -> void {
    if (idx == k) {
      fill_rows(fill_rows, 0);
      return;
    }
    for (int c = from; c <= m - (k - idx); ++c) {
      pivots[idx] = c;
      self(self, idx + 1, c + 1);
    }
  };
  choose_pivots(choose_pivots, 0, 0);
}

/// Visits every k-dimensional subspace containing `base` exactly once.
/// There are gaussian_binomial(m - dim base, k - dim base) of them.
template <typename Fn>
void for_each_oversubspace(const Gf2Subspace& base, int k, Fn&& fn,
                           int dim_cap = kDefaultEnumDimCap) {
  const int m = base.ambient_dim(), d = base.dim();
  if (k < d || k > m) throw std::invalid_argument("for_each_oversubspace: k out of range");

  // Overspaces of `base` correspond to subspaces of the quotient space,
  // whose coordinates are the non-pivot columns of the base.
  std::vector<int> quot_cols;
  std::uint64_t pivot_mask = 0;
  for (std::uint64_t r : base.rows()) pivot_mask |= std::uint64_t{1} << std::countr_zero(r);
  for (int c = 0; c < m; ++c)
    if (!(pivot_mask >> c & 1)) quot_cols.push_back(c);

  for_each_subspace(
      m - d, k - d,
      [&](const Gf2Subspace& q) {
        Gf2Subspace w = base;
        for (std::uint64_t qrow : q.rows()) {
          std::uint64_t lift = 0;
          for (std::size_t j = 0; j < quot_cols.size(); ++j)
            if (qrow >> j & 1) lift |= std::uint64_t{1} << quot_cols[j];
          w.insert(lift);
        }
        fn(static_cast<const Gf2Subspace&>(w));
      },
      dim_cap);
}

}  // namespace subcensus
