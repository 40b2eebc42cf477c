#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subcensus {

inline constexpr int kDefaultBuildOrderCap = 4096;

class GroupTable;

/// Subset of a group's elements as a bit vector over element indices.
/// The lattice code only ever stores genuine subgroups here; is_subgroup()
/// checks the invariant when a set comes from elsewhere.
class SubgroupSet {
 public:
  explicit SubgroupSet(const GroupTable& parent);

  const GroupTable& parent() const { return *parent_; }
  bool contains(int i) const { return words_[static_cast<std::size_t>(i) >> 6] >> (i & 63) & 1; }
  void add(int i) {
    std::uint64_t& w = words_[static_cast<std::size_t>(i) >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (!(w & bit)) {
      w |= bit;
      ++size_;
    }
  }

  int size() const { return size_; }
  int order_exponent() const {
    if (!std::has_single_bit(static_cast<unsigned>(size_)))
      throw std::logic_error("member count is not a power of two");
    return std::countr_zero(static_cast<unsigned>(size_));
  }

  bool subset_of(const SubgroupSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool is_subgroup() const;
  bool normal_in_parent() const;
  /// Normality inside an enclosing subgroup: h H h^-1 = H for all h in `super`.
  bool normal_in(const SubgroupSet& super) const;

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_ == b.parent_ && a.words_ == b.words_;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  const GroupTable* parent_;
  std::vector<std::uint64_t> words_;
  int size_ = 0;
};

struct SubgroupSetHash {
  std::size_t operator()(const SubgroupSet& s) const { return s.hash(); }
};

struct Classification {
  bool is_elementary_abelian = false;
  bool is_abelian = false;
  bool is_extraspecial = false;
  bool is_almost_extraspecial = false;
  bool is_generalized_extraspecial = false;
  int exponent = 1;
};

/// A finite 2-group as a dense multiplication table over element indices
/// 0..order-1 with identity 0. Construction validates the table (exhaustive
/// associativity up to order 256, random triples above) and caches inverses
/// and element orders. Immutable afterwards, safe to share across threads.
class GroupTable {
 public:
  int order() const { return order_; }
  int order_exponent() const { return n_; }
  int op(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const { return elem_order_[static_cast<std::size_t>(a)]; }
  int commutator(int a, int b) const { return op(op(inverse(a), inverse(b)), op(a, b)); }
  int conjugate(int x, int by) const { return op(op(by, x), inverse(by)); }

  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  /// The amalgamation point used by central products: the canonical central
  /// involution of the construction, when one exists.
  std::optional<int> central_involution() const { return central_involution_; }

  int exponent() const {
    int e = 1;
    for (int g = 0; g < order_; ++g) e = std::max(e, element_order(g));
    return e;
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

  SubgroupSet trivial_subgroup() const {
    SubgroupSet s(*this);
    return s;
  }

  SubgroupSet whole_group() const {
    SubgroupSet s(*this);
    for (int g = 1; g < order_; ++g) s.add(g);
    return s;
  }

  SubgroupSet closure(const std::vector<int>& generators) const {
    SubgroupSet s(*this);
    std::vector<int> found = {0};
    std::vector<int> queue;
    for (int g : generators)
      if (!s.contains(g)) {
        s.add(g);
        found.push_back(g);
        queue.push_back(g);
      }
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      for (std::size_t i = 0; i < found.size(); ++i) {
        for (int p : {op(x, found[i]), op(found[i], x)}) {
          if (!s.contains(p)) {
            s.add(p);
            found.push_back(p);
            queue.push_back(p);
          }
        }
      }
    }
    return s;
  }

  SubgroupSet center() const {
    SubgroupSet s(*this);
    for (int g = 0; g < order_; ++g) {
      bool central = true;
      for (int x = 0; x < order_ && central; ++x) central = op(g, x) == op(x, g);
      if (central) s.add(g);
    }
    return s;
  }

  SubgroupSet derived_subgroup() const {
    std::vector<int> gens;
    SubgroupSet seen(*this);
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b) {
        const int c = commutator(a, b);
        if (!seen.contains(c)) {
          seen.add(c);
          gens.push_back(c);
        }
      }
    return closure(gens);
  }

  /// Burnside basis: in a 2-group the Frattini subgroup is generated by
  /// squares and commutators.
  SubgroupSet frattini_subgroup() const {
    std::vector<int> gens;
    SubgroupSet seen(*this);
    for (int a = 0; a < order_; ++a) {
      const int sq = op(a, a);
      if (!seen.contains(sq)) {
        seen.add(sq);
        gens.push_back(sq);
      }
    }
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b) {
        const int c = commutator(a, b);
        if (!seen.contains(c)) {
          seen.add(c);
          gens.push_back(c);
        }
      }
    return closure(gens);
  }

  Classification classify() const {
    Classification c;
    c.is_abelian = is_abelian();
    c.exponent = exponent();
    c.is_elementary_abelian = c.is_abelian && c.exponent <= 2;
    const SubgroupSet z = center(), d = derived_subgroup(), phi = frattini_subgroup();
    const bool d_is_phi_of_order2 = d == phi && d.size() == 2;
    c.is_extraspecial = d_is_phi_of_order2 && z == d;
    if (d_is_phi_of_order2 && z.size() == 4) {
      bool z_cyclic4 = false;
      for (int g : z.members()) z_cyclic4 = z_cyclic4 || element_order(g) == 4;
      c.is_almost_extraspecial = z_cyclic4 && d.subset_of(z);
    }
    c.is_generalized_extraspecial = d_is_phi_of_order2 && d.subset_of(z);
    return c;
  }

  /// Coset table of G/N. N must be normal; the optional out-parameter
  /// receives the element -> coset-index projection.
  GroupTable quotient(const SubgroupSet& normal, std::vector<int>* projection = nullptr) const {
    if (&normal.parent() != this) throw std::invalid_argument("quotient: subgroup of a different group");
    if (!normal.is_subgroup()) throw std::invalid_argument("quotient: set is not a subgroup");
    if (!normal.normal_in_parent()) throw std::invalid_argument("quotient: subgroup is not normal");
    const std::vector<int> nm = normal.members();
    std::vector<int> cid(static_cast<std::size_t>(order_), -1);
    std::vector<int> reps;
    for (int g = 0; g < order_; ++g) {
      if (cid[static_cast<std::size_t>(g)] >= 0) continue;
      const int id = static_cast<int>(reps.size());
      reps.push_back(g);
      for (int x : nm) cid[static_cast<std::size_t>(op(g, x))] = id;
    }
    GroupTable q;
    q.init_order(static_cast<int>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        q.mult_[i * reps.size() + j] =
            static_cast<std::uint16_t>(cid[static_cast<std::size_t>(op(reps[i], reps[j]))]);
    q.label_ = label_ + "/N" + std::to_string(normal.size());
    q.finalize();
    if (projection) *projection = std::move(cid);
    return q;
  }

  // ---- constructions -------------------------------------------------

  static GroupTable cyclic(int order) {
    if (order < 1 || !std::has_single_bit(static_cast<unsigned>(order)))
      throw std::invalid_argument("cyclic: order must be a power of two");
    GroupTable g;
    g.init_order(order);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        g.mult_[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint16_t>((a + b) % order);
    g.label_ = "C" + std::to_string(order);
    if (order >= 2) g.central_involution_ = order / 2;
    g.finalize();
    return g;
  }

  static GroupTable elementary_abelian(int rank) {
    if (rank < 0 || rank > 12) throw std::invalid_argument("elementary_abelian: rank out of range");
    GroupTable g;
    g.init_order(1 << rank);
    for (int a = 0; a < g.order_; ++a)
      for (int b = 0; b < g.order_; ++b)
        g.mult_[static_cast<std::size_t>(a) * g.order_ + b] = static_cast<std::uint16_t>(a ^ b);
    g.label_ = rank == 1 ? "C2" : "C2^" + std::to_string(rank);
    if (rank == 1) g.central_involution_ = 1;
    g.finalize();
    return g;
  }

  /// <r, s | r^4 = s^2 = 1, s r s = r^-1>, elements r^a s^b at index a + 4b.
  static GroupTable dihedral8() {
    GroupTable g;
    g.init_order(8);
    for (int a1 = 0; a1 < 4; ++a1)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int a2 = 0; a2 < 4; ++a2)
          for (int b2 = 0; b2 < 2; ++b2) {
            const int ra = ((b1 ? a1 - a2 : a1 + a2) % 4 + 4) % 4;
            g.mult_[static_cast<std::size_t>(a1 + 4 * b1) * 8 + (a2 + 4 * b2)] =
                static_cast<std::uint16_t>(ra + 4 * (b1 ^ b2));
          }
    g.label_ = "D8";
    g.central_involution_ = 2;  // r^2
    g.finalize();
    return g;
  }

  /// {1, i, j, k} x {+,-} at index q + 4s; -1 sits at index 4.
  static GroupTable quaternion8() {
    static constexpr std::array<std::array<int, 4>, 4> prod = {{{0, 1, 2, 3},
                                                                {1, 0, 3, 2},
                                                                {2, 3, 0, 1},
                                                                {3, 2, 1, 0}}};
    static constexpr std::array<std::array<int, 4>, 4> sign = {{{0, 0, 0, 0},
                                                                {0, 1, 0, 1},
                                                                {0, 1, 1, 0},
                                                                {0, 0, 1, 1}}};
    GroupTable g;
    g.init_order(8);
    for (int q1 = 0; q1 < 4; ++q1)
      for (int s1 = 0; s1 < 2; ++s1)
        for (int q2 = 0; q2 < 4; ++q2)
          for (int s2 = 0; s2 < 2; ++s2)
            g.mult_[static_cast<std::size_t>(q1 + 4 * s1) * 8 + (q2 + 4 * s2)] =
                static_cast<std::uint16_t>(prod[q1][q2] + 4 * (s1 ^ s2 ^ sign[q1][q2]));
    g.label_ = "Q8";
    g.central_involution_ = 4;  // -1
    g.finalize();
    return g;
  }

  static GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                                   int order_cap = kDefaultBuildOrderCap) {
    if (static_cast<long long>(a.order_) * b.order_ > order_cap)
      throw std::invalid_argument("direct_product: order cap exceeded");
    GroupTable g;
    g.init_order(a.order_ * b.order_);
    for (int a1 = 0; a1 < a.order_; ++a1)
      for (int b1 = 0; b1 < b.order_; ++b1)
        for (int a2 = 0; a2 < a.order_; ++a2)
          for (int b2 = 0; b2 < b.order_; ++b2)
            g.mult_[static_cast<std::size_t>(a1 * b.order_ + b1) * g.order_ + (a2 * b.order_ + b2)] =
                static_cast<std::uint16_t>(a.op(a1, a2) * b.order_ + b.op(b1, b2));
    g.label_ = a.label_ + " x " + b.label_;
    g.finalize();
    return g;
  }

  /// Amalgamated central product: (A x B) / <(z_A, z_B)> where z_A, z_B are
  /// the designated central involutions. Operands without one are rejected.
  static GroupTable central_product(const GroupTable& a, const GroupTable& b,
                                    int order_cap = kDefaultBuildOrderCap) {
    if (!a.central_involution_)
      throw std::invalid_argument("central_product: no designated central involution in " + a.label_);
    if (!b.central_involution_)
      throw std::invalid_argument("central_product: no designated central involution in " + b.label_);
    if (static_cast<long long>(a.order_) * b.order_ / 2 > order_cap)
      throw std::invalid_argument("central_product: order cap exceeded");
    const GroupTable d = direct_product(a, b, order_cap * 2);
    SubgroupSet amalgam(d);
    amalgam.add(0);
    amalgam.add(*a.central_involution_ * b.order_ + *b.central_involution_);
    std::vector<int> proj;
    GroupTable g = d.quotient(amalgam, &proj);
    g.label_ = paren_if_contains(a.label_, " x ") + " * " + paren_if_contains(b.label_, " x ");
    g.central_involution_ = proj[static_cast<std::size_t>(*a.central_involution_ * b.order_)];
    if (g.element_order(*g.central_involution_) != 2)
      throw std::logic_error("central_product: amalgamated involution lost its order");
    return g;
  }

 private:
  friend class SubgroupSet;

  GroupTable() = default;

  static std::string paren_if_contains(const std::string& s, const char* needle) {
    return s.find(needle) == std::string::npos ? s : "(" + s + ")";
  }

  void init_order(int order) {
    if (order < 1 || order > kDefaultBuildOrderCap || !std::has_single_bit(static_cast<unsigned>(order)))
      throw std::invalid_argument("group order must be a power of two within the build cap");
    order_ = order;
    n_ = std::countr_zero(static_cast<unsigned>(order));
    mult_.assign(static_cast<std::size_t>(order) * order, 0);
  }

  void finalize() {
    validate_table();
    inverse_.assign(static_cast<std::size_t>(order_), 0);
    for (int a = 0; a < order_; ++a) {
      bool found = false;
      for (int b = 0; b < order_ && !found; ++b)
        if (op(a, b) == 0) {
          inverse_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
          found = true;
        }
      if (!found) throw std::logic_error("element without inverse");
    }
    elem_order_.assign(static_cast<std::size_t>(order_), 1);
    for (int a = 0; a < order_; ++a) {
      // Orders divide 2^n, so the squaring chain reaches the identity.
      int y = a, ord = 1, steps = 0;
      while (y != 0) {
        y = op(y, y);
        ord *= 2;
        if (++steps > n_ + 1) throw std::logic_error("element order is not a power of two");
      }
      elem_order_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(ord);
    }
  }

  void validate_table() {
    for (int a = 0; a < order_; ++a)
      if (op(0, a) != a || op(a, 0) != a) throw std::logic_error("identity row/column broken");
    std::vector<char> seen(static_cast<std::size_t>(order_));
    for (int a = 0; a < order_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < order_; ++b) seen[static_cast<std::size_t>(op(a, b))] = 1;
      for (char c : seen)
        if (!c) throw std::logic_error("row is not a permutation");
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < order_; ++b) seen[static_cast<std::size_t>(op(b, a))] = 1;
      for (char c : seen)
        if (!c) throw std::logic_error("column is not a permutation");
    }
    if (order_ <= 256) {
      for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
          for (int c = 0; c < order_; ++c)
            if (op(op(a, b), c) != op(a, op(b, c))) throw std::logic_error("associativity fails");
    } else {
      std::mt19937 rng(0x5ca1ab1e);
      std::uniform_int_distribution<int> pick(0, order_ - 1);
      for (int t = 0; t < 100000; ++t) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        if (op(op(a, b), c) != op(a, op(b, c))) throw std::logic_error("associativity fails");
      }
    }
  }

  std::string label_;
  int order_ = 1;
  int n_ = 0;
  std::vector<std::uint16_t> mult_, inverse_, elem_order_;
  std::optional<int> central_involution_;
};

inline SubgroupSet::SubgroupSet(const GroupTable& parent)
    : parent_(&parent), words_((static_cast<std::size_t>(parent.order()) + 63) / 64, 0) {
  add(0);
}

inline bool SubgroupSet::is_subgroup() const {
  if (!contains(0)) return false;
  const std::vector<int> m = members();
  for (int a : m)
    for (int b : m)
      if (!contains(parent_->op(a, b))) return false;
  return true;
}

inline bool SubgroupSet::normal_in_parent() const {
  const std::vector<int> m = members();
  for (int g = 0; g < parent_->order(); ++g)
    for (int x : m)
      if (!contains(parent_->conjugate(x, g))) return false;
  return true;
}

inline bool SubgroupSet::normal_in(const SubgroupSet& super) const {
  const std::vector<int> m = members();
  for (int g : super.members())
    for (int x : m)
      if (!contains(parent_->conjugate(x, g))) return false;
  return true;
}

// ---- group-spec expression trees --------------------------------------

/// Construction expression over the leaf groups the census families need.
/// Central products always amalgamate the designated involutions; asking for
/// one on an operand without a designated involution is a build error.
struct GroupSpec {
  enum class Kind { kLeaf, kDirect, kCentral, kDirectPower, kCentralPower };
  enum class Leaf { kC2, kC4, kC8, kD8, kQ8, kElementary };

  Kind kind = Kind::kLeaf;
  Leaf leaf = Leaf::kC2;
  int rank = 0;   // kElementary
  int power = 0;  // power nodes
  std::vector<GroupSpec> children;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  static GroupSpec atom(Leaf l) {
    GroupSpec s;
    s.leaf = l;
    return s;
  }
  static GroupSpec elementary(int rank) {
    if (rank == 1) return atom(Leaf::kC2);
    GroupSpec s;
    s.leaf = Leaf::kElementary;
    s.rank = rank;
    return s;
  }
  static GroupSpec direct(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::kDirect;
    s.children = {std::move(a), std::move(b)};
    return s;
  }
  static GroupSpec central(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::kCentral;
    s.children = {std::move(a), std::move(b)};
    return s;
  }
  static GroupSpec direct_power(GroupSpec a, int k) {
    if (k == 1) return a;
    if (a.kind == Kind::kLeaf && a.leaf == Leaf::kC2) return elementary(k);
    GroupSpec s;
    s.kind = Kind::kDirectPower;
    s.power = k;
    s.children = {std::move(a)};
    return s;
  }
  static GroupSpec central_power(GroupSpec a, int k) {
    if (k == 1) return a;
    GroupSpec s;
    s.kind = Kind::kCentralPower;
    s.power = k;
    s.children = {std::move(a)};
    return s;
  }
};

namespace detail {
// Precedence: x = 1, * = 2, ^ = 3, atom = 4.
inline int spec_precedence(const GroupSpec& s) {
  switch (s.kind) {
    case GroupSpec::Kind::kLeaf: return 4;
    case GroupSpec::Kind::kDirectPower:
    case GroupSpec::Kind::kCentralPower: return 3;
    case GroupSpec::Kind::kCentral: return 2;
    case GroupSpec::Kind::kDirect: return 1;
  }
  return 0;
}

inline void print_spec(const GroupSpec& s, std::string& out) {
  auto child = [&](const GroupSpec& c, int min_prec) {
    if (spec_precedence(c) < min_prec) {
      out += '(';
      print_spec(c, out);
      out += ')';
    } else {
      print_spec(c, out);
    }
  };
  switch (s.kind) {
    case GroupSpec::Kind::kLeaf:
      switch (s.leaf) {
        case GroupSpec::Leaf::kC2: out += "C2"; break;
        case GroupSpec::Leaf::kC4: out += "C4"; break;
        case GroupSpec::Leaf::kC8: out += "C8"; break;
        case GroupSpec::Leaf::kD8: out += "D8"; break;
        case GroupSpec::Leaf::kQ8: out += "Q8"; break;
        case GroupSpec::Leaf::kElementary:
          out += "C2^" + std::to_string(s.rank);
          break;
      }
      break;
    case GroupSpec::Kind::kDirect:
      child(s.children[0], 1);
      out += " x ";
      child(s.children[1], 2);  // right operand needs parens if it is another x
      break;
    case GroupSpec::Kind::kCentral:
      child(s.children[0], 2);
      out += " * ";
      child(s.children[1], 3);
      break;
    case GroupSpec::Kind::kDirectPower:
      child(s.children[0], 4);
      out += "^" + std::to_string(s.power);
      break;
    case GroupSpec::Kind::kCentralPower:
      child(s.children[0], 4);
      out += "^{*" + std::to_string(s.power) + "}";
      break;
  }
}
}  // namespace detail

inline std::string to_string(const GroupSpec& s) {
  std::string out;
  detail::print_spec(s, out);
  return out;
}

/// Order exponent of the group a spec would build, without building it.
inline int spec_order_exponent(const GroupSpec& s) {
  switch (s.kind) {
    case GroupSpec::Kind::kLeaf:
      switch (s.leaf) {
        case GroupSpec::Leaf::kC2: return 1;
        case GroupSpec::Leaf::kC4: return 2;
        case GroupSpec::Leaf::kC8:
        case GroupSpec::Leaf::kD8:
        case GroupSpec::Leaf::kQ8: return 3;
        case GroupSpec::Leaf::kElementary: return s.rank;
      }
      break;
    case GroupSpec::Kind::kDirect:
      return spec_order_exponent(s.children[0]) + spec_order_exponent(s.children[1]);
    case GroupSpec::Kind::kCentral:
      return spec_order_exponent(s.children[0]) + spec_order_exponent(s.children[1]) - 1;
    case GroupSpec::Kind::kDirectPower:
      return s.power * spec_order_exponent(s.children[0]);
    case GroupSpec::Kind::kCentralPower:
      return s.power * spec_order_exponent(s.children[0]) - (s.power - 1);
  }
  return 0;
}

/// Realizes a construction expression as a multiplication table.
inline GroupTable build(const GroupSpec& spec, int order_cap = kDefaultBuildOrderCap) {
  auto rec = [&](auto&& self, const GroupSpec& s) -> GroupTable {
    switch (s.kind) {
      case GroupSpec::Kind::kLeaf:
        switch (s.leaf) {
          case GroupSpec::Leaf::kC2: return GroupTable::cyclic(2);
          case GroupSpec::Leaf::kC4: return GroupTable::cyclic(4);
          case GroupSpec::Leaf::kC8: return GroupTable::cyclic(8);
          case GroupSpec::Leaf::kD8: return GroupTable::dihedral8();
          case GroupSpec::Leaf::kQ8: return GroupTable::quaternion8();
          case GroupSpec::Leaf::kElementary: {
            if ((1LL << s.rank) > order_cap)
              throw std::invalid_argument("build: order cap exceeded");
            return GroupTable::elementary_abelian(s.rank);
          }
        }
        break;
      case GroupSpec::Kind::kDirect:
        return GroupTable::direct_product(self(self, s.children[0]), self(self, s.children[1]),
                                          order_cap);
      case GroupSpec::Kind::kCentral:
        return GroupTable::central_product(self(self, s.children[0]), self(self, s.children[1]),
                                           order_cap);
      case GroupSpec::Kind::kDirectPower: {
        if (s.power < 1) throw std::invalid_argument("build: power must be positive");
        GroupTable base = self(self, s.children[0]);
        GroupTable acc = base;
        for (int i = 1; i < s.power; ++i) acc = GroupTable::direct_product(acc, base, order_cap);
        return acc;
      }
      case GroupSpec::Kind::kCentralPower: {
        if (s.power < 1) throw std::invalid_argument("build: power must be positive");
        GroupTable base = self(self, s.children[0]);
        GroupTable acc = base;
        for (int i = 1; i < s.power; ++i) acc = GroupTable::central_product(acc, base, order_cap);
        return acc;
      }
    }
    throw std::logic_error("build: unreachable");
  };
  GroupTable g = rec(rec, spec);
  g.set_label(to_string(spec));
  return g;
}

}  // namespace subcensus
