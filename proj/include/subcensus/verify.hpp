#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "subcensus/formulas.hpp"
#include "subcensus/grouptable.hpp"
#include "subcensus/oracle.hpp"

namespace subcensus {

/// Checks exposed by the `verify` command. Each is an instance-level
/// verification over the constructible families below, not a proof.
enum class CheckId { kThm11, kLem22, kLem14, kCor29 };

inline std::optional<CheckId> check_from_token(const std::string& token) {
  if (token == "thm11") return CheckId::kThm11;
  if (token == "lem22") return CheckId::kLem22;
  if (token == "lem14") return CheckId::kLem14;
  if (token == "cor29") return CheckId::kCor29;
  return std::nullopt;
}

enum class FamilyId { kAbelian, kGenExtraspecial, kCentralProducts };

inline std::optional<FamilyId> family_from_token(const std::string& token) {
  if (token == "abelian") return FamilyId::kAbelian;
  if (token == "genextra") return FamilyId::kGenExtraspecial;
  if (token == "central-products") return FamilyId::kCentralProducts;
  return std::nullopt;
}

/// One constructible group of order 2^n, presented as a core factor A times
/// an elementary abelian C2^m so censuses can go through the quintuple count
/// when the full group is too large to enumerate.
struct FamilyInstance {
  std::string label;
  int n = 0;
  GroupTable core = GroupTable::cyclic(1);
  int elem_rank = 0;
  bool elementary_abelian = false;
  bool is_reference = false;  // the D8 x C2^{n-3} instance itself

  GroupTable table(int order_cap = kDefaultBuildOrderCap) const {
    if (elem_rank == 0) return core;
    GroupTable t = GroupTable::direct_product(core, GroupTable::elementary_abelian(elem_rank),
                                              order_cap);
    t.set_label(label);
    return t;
  }

  std::string census_method() const { return elem_rank == 0 ? "oracle" : "goursat"; }

  CensusTable census(int oracle_cap = kDefaultOracleCap) const {
    if (elem_rank == 0) return oracle_census(core, oracle_cap);
    return census_from_goursat(goursat_input(core, elem_rank, oracle_cap));
  }
};

namespace detail {

inline std::string cyclic_power_label(const std::vector<int>& parts) {
  std::string label;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!label.empty()) label += " x ";
    label += "C" + std::to_string(1 << parts[i]);
    if (j - i > 1) label += "^" + std::to_string(j - i);
    i = j;
  }
  return label;
}

inline void append_abelian_instances(int n, std::vector<FamilyInstance>& out) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      const int m = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
      FamilyInstance inst{cyclic_power_label(parts), n, GroupTable::cyclic(1), 0,
                          /*elementary_abelian=*/m == n, /*is_reference=*/false};
      GroupTable core = GroupTable::cyclic(1);
      bool first = true;
      for (int p : parts) {
        if (p == 1) continue;
        core = first ? GroupTable::cyclic(1 << p)
                     : GroupTable::direct_product(core, GroupTable::cyclic(1 << p));
        first = false;
      }
      inst.core = std::move(core);
      inst.elem_rank = m;
      out.push_back(std::move(inst));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
}

inline GroupTable central_word(int num_q8, int num_d8, bool with_c4) {
  GroupTable acc = num_q8 > 0 ? GroupTable::quaternion8() : GroupTable::dihedral8();
  for (int i = 1; i < num_q8; ++i) acc = GroupTable::central_product(acc, GroupTable::quaternion8());
  for (int i = num_q8 > 0 ? 0 : 1; i < num_d8; ++i)
    acc = GroupTable::central_product(acc, GroupTable::dihedral8());
  if (with_c4) acc = GroupTable::central_product(acc, GroupTable::cyclic(4));
  return acc;
}

inline std::string central_word_label(int num_q8, int num_d8, bool with_c4) {
  std::string label;
  auto append = [&](const std::string& s) {
    if (!label.empty()) label += " * ";
    label += s;
  };
  if (num_q8 == 1) append("Q8");
  if (num_q8 > 1) append("Q8^{*" + std::to_string(num_q8) + "}");
  if (num_d8 == 1) append("D8");
  if (num_d8 > 1) append("D8^{*" + std::to_string(num_d8) + "}");
  if (with_c4) append("C4");
  return label;
}

inline void append_genextra_instances(int n, std::vector<FamilyInstance>& out) {
  for (int r = 1; 2 * r + 1 <= n; ++r) {
    const int m = n - 2 * r - 1;
    for (const bool minus_type : {false, true}) {
      FamilyInstance inst;
      inst.core = central_word(minus_type ? 1 : 0, minus_type ? r - 1 : r, false);
      inst.label = central_word_label(minus_type ? 1 : 0, minus_type ? r - 1 : r, false);
      if (m > 0) inst.label += " x " + (m == 1 ? std::string("C2") : "C2^" + std::to_string(m));
      inst.n = n;
      inst.elem_rank = m;
      inst.is_reference = !minus_type && r == 1;
      out.push_back(std::move(inst));
    }
  }
  for (int r = 1; 2 * r + 2 <= n; ++r) {
    const int m = n - 2 * r - 2;
    FamilyInstance inst;
    inst.core = central_word(0, r, true);
    inst.label = central_word_label(0, r, true);
    if (m > 0) inst.label += " x " + (m == 1 ? std::string("C2") : "C2^" + std::to_string(m));
    inst.n = n;
    inst.elem_rank = m;
    out.push_back(std::move(inst));
  }
}

inline void append_central_product_instances(int n, std::vector<FamilyInstance>& out) {
  for (int r = 1; 2 * r + 1 <= n; ++r) {
    const int m = n - 2 * r - 1;
    for (int q = 0; q <= r; ++q) {
      FamilyInstance inst;
      inst.core = central_word(q, r - q, false);
      inst.label = central_word_label(q, r - q, false);
      if (m > 0) inst.label += " x " + (m == 1 ? std::string("C2") : "C2^" + std::to_string(m));
      inst.n = n;
      inst.elem_rank = m;
      inst.is_reference = q == 0 && r == 1;
      out.push_back(std::move(inst));
    }
  }
}

}  // namespace detail

inline std::vector<FamilyInstance> make_family_instances(FamilyId family, int n) {
  std::vector<FamilyInstance> out;
  switch (family) {
    case FamilyId::kAbelian: detail::append_abelian_instances(n, out); break;
    case FamilyId::kGenExtraspecial: detail::append_genextra_instances(n, out); break;
    case FamilyId::kCentralProducts: detail::append_central_product_instances(n, out); break;
  }
  return out;
}

struct VerifyOptions {
  int n_min = 3;
  int n_max = 6;
  std::vector<FamilyId> families = {FamilyId::kAbelian, FamilyId::kGenExtraspecial,
                                    FamilyId::kCentralProducts};
  int oracle_cap = kDefaultOracleCap;
  int quotient_order_cap = 64;  // instance size bound for the lem22 sweep
};

struct InstanceRow {
  std::string label;
  int n = 0;
  std::string method;
  std::string status;  // "pass", "FAIL", "skip"
  std::string note;
};

struct VerifyReport {
  std::vector<std::string> header;
  std::vector<InstanceRow> rows;

  bool all_pass() const {
    for (const InstanceRow& r : rows)
      if (r.status == "FAIL") return false;
    return true;
  }
};

namespace detail {

inline std::vector<FamilyInstance> gather_instances(const VerifyOptions& opt, int n) {
  std::vector<FamilyInstance> all;
  std::set<std::string> seen;
  for (FamilyId f : opt.families)
    for (FamilyInstance& inst : make_family_instances(f, n))
      if (seen.insert(inst.label).second) all.push_back(std::move(inst));
  return all;
}

}  // namespace detail

inline VerifyReport run_verification(CheckId check, const VerifyOptions& opt) {
  VerifyReport report;
  switch (check) {
    case CheckId::kThm11:
      report.header.push_back(
          "thm11: s_k(G) <= s_k(D8 x C2^{n-3}) for all k, over non-elementary-abelian instances");
      break;
    case CheckId::kLem22:
      report.header.push_back(
          "lem22: s_k(G) <= s_k(G/M x C2^r) for every normal subgroup M of order 2^r");
      break;
    case CheckId::kLem14:
      report.header.push_back(
          "lem14: |L1(G)| <= 7*2^{n-3}, with equality exactly for D8 x C2^{n-3}");
      break;
    case CheckId::kCor29:
      report.header.push_back("cor29: |L(G)| <= |L(D8 x C2^{n-3})|");
      break;
  }
  report.header.push_back(
      "scope: constructible families only (abelian partition products, generalized extraspecial "
      "constructions, central-product words); the statement over all 2-groups of order 2^n is not "
      "covered without a classification database.");

  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    const CensusTable reference = census_from_formula(ProductFamily::kD8, n);
    for (const FamilyInstance& inst : detail::gather_instances(opt, n)) {
      InstanceRow row{inst.label, n, inst.census_method(), "pass", ""};
      if (inst.elementary_abelian && check != CheckId::kLem22) {
        row.status = "skip";
        row.note = "elementary abelian: outside the hypothesis";
        report.rows.push_back(std::move(row));
        continue;
      }
      switch (check) {
        case CheckId::kThm11: {
          const CensusTable c = inst.census(opt.oracle_cap);
          const DominanceResult res = dominance_check(c, reference);
          if (!res.dominated) {
            row.status = "FAIL";
            row.note = "s_k exceeds the reference at k = " + std::to_string(res.first_violation);
          }
          break;
        }
        case CheckId::kCor29: {
          const CensusTable c = inst.census(opt.oracle_cap);
          if (c.total() > reference.total()) {
            row.status = "FAIL";
            row.note = "lattice larger than the reference";
          } else {
            row.note = "|L| = " + c.total().to_string();
          }
          break;
        }
        case CheckId::kLem14: {
          const GroupTable g = inst.table();
          const std::int64_t l1 = cyclic_subgroup_total(g);
          const std::int64_t bound = std::int64_t{7} << (n - 3);
          row.method = "element orders";
          row.note = "|L1| = " + std::to_string(l1) + " vs " + std::to_string(bound);
          if (l1 > bound)
            row.status = "FAIL";
          else if (inst.is_reference && l1 != bound) {
            row.status = "FAIL";
            row.note += " (expected equality for the reference group)";
          } else if (!inst.is_reference && l1 == bound) {
            row.status = "FAIL";
            row.note += " (equality off the reference group)";
          }
          break;
        }
        case CheckId::kLem22: {
          if ((1 << n) > opt.quotient_order_cap) {
            row.status = "skip";
            row.note = "above the quotient sweep cap";
            break;
          }
          const GroupTable g = inst.table();
          const CensusTable base = oracle_census(g, opt.oracle_cap);
          const SubgroupLattice lat = enumerate_lattice(g, opt.oracle_cap);
          int checked = 0;
          row.method = "oracle";
          for (int r = 1; r <= n && row.status == "pass"; ++r) {
            for (const SubgroupSet& m : lat.level(r)) {
              if (!m.normal_in_parent()) continue;
              const GroupTable q = g.quotient(m);
              // s_k(G/M x C2^r) through the quintuple count over the much
              // smaller quotient lattice.
              const CensusTable rhs = census_from_goursat(goursat_input(q, r, opt.oracle_cap));
              const DominanceResult res = dominance_check(base, rhs);
              ++checked;
              if (!res.dominated) {
                row.status = "FAIL";
                row.note = "violated for |M| = 2^" + std::to_string(r) + " at k = " +
                           std::to_string(res.first_violation);
                break;
              }
            }
          }
          if (row.status == "pass")
            row.note = std::to_string(checked) + " normal subgroups checked";
          break;
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace subcensus
