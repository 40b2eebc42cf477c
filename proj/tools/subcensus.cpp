// Command-line front end: censuses, lattices, section tables, quadratic-form
// counts, and the instance verification harness. Exit codes: 0 all checks
// pass, 1 a verification or cross-method mismatch, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subcensus/subcensus.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace subcensus;

enum class Format { kText, kCsv, kJson };

Format parse_format(const std::string& f) {
  if (f == "text") return Format::kText;
  if (f == "csv") return Format::kCsv;
  if (f == "json") return Format::kJson;
  throw CLI::ValidationError("--format", "expected text, csv or json");
}

struct CensusReport {
  std::string label;
  int n = 0;
  std::string method;
  CensusTable table;
};

void emit_census(const CensusReport& rep, Format fmt) {
  switch (fmt) {
    case Format::kJson: {
      json j;
      j["label"] = rep.label;
      j["n"] = rep.n;
      j["rows"] = json::array();
      for (int k = 0; k <= rep.table.n; ++k)
        j["rows"].push_back({{"k", k}, {"count", rep.table.s[static_cast<std::size_t>(k)].to_string()}});
      j["total"] = rep.table.total().to_string();
      j["method"] = rep.method;
      j["version"] = kVersion;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      std::cout << "k,count\n";
      for (int k = 0; k <= rep.table.n; ++k)
        std::cout << k << "," << rep.table.s[static_cast<std::size_t>(k)].to_string() << "\n";
      std::cout << "total," << rep.table.total().to_string() << "\n";
      break;
    }
    case Format::kText: {
      std::cout << rep.label << "  (order 2^" << rep.n << ", method " << rep.method << ")\n";
      for (int k = 0; k <= rep.table.n; ++k)
        std::cout << "  s_" << k << " = " << rep.table.s[static_cast<std::size_t>(k)].to_string()
                  << "\n";
      std::cout << "  |L| = " << rep.table.total().to_string() << "\n";
      break;
    }
  }
}

/// Flattens a top-level direct product into its non-C2 core and the rank of
/// the elementary abelian cofactor, the shape the quintuple counter wants.
void split_elementary(const GroupSpec& s, std::vector<const GroupSpec*>& core, int& rank) {
  if (s.kind == GroupSpec::Kind::kDirect) {
    split_elementary(s.children[0], core, rank);
    split_elementary(s.children[1], core, rank);
    return;
  }
  if (s.kind == GroupSpec::Kind::kLeaf && s.leaf == GroupSpec::Leaf::kC2) {
    rank += 1;
    return;
  }
  if (s.kind == GroupSpec::Kind::kLeaf && s.leaf == GroupSpec::Leaf::kElementary) {
    rank += s.rank;
    return;
  }
  if (s.kind == GroupSpec::Kind::kDirectPower && s.children[0].kind == GroupSpec::Kind::kLeaf &&
      s.children[0].leaf == GroupSpec::Leaf::kC2) {
    rank += s.power;
    return;
  }
  core.push_back(&s);
}

/// Recognizes the two closed-form families: D8 x C2^{n-3} and C4 x C2^{n-2}.
std::optional<ProductFamily> closed_form_family(const GroupSpec& s, int* n_out) {
  std::vector<const GroupSpec*> core;
  int rank = 0;
  split_elementary(s, core, rank);
  if (core.size() != 1 || core[0]->kind != GroupSpec::Kind::kLeaf) return std::nullopt;
  if (core[0]->leaf == GroupSpec::Leaf::kD8) {
    *n_out = rank + 3;
    return ProductFamily::kD8;
  }
  if (core[0]->leaf == GroupSpec::Leaf::kC4 && rank >= 1) {
    *n_out = rank + 2;
    return ProductFamily::kC4C2;
  }
  return std::nullopt;
}

CensusReport compute_census(const GroupSpec& spec, const std::string& method, int oracle_cap) {
  CensusReport rep;
  rep.label = to_string(spec);

  int family_n = 0;
  const std::optional<ProductFamily> family = closed_form_family(spec, &family_n);
  std::vector<const GroupSpec*> core_parts;
  int elem_rank = 0;
  split_elementary(spec, core_parts, elem_rank);

  auto run_oracle = [&] {
    const GroupTable g = build(spec);
    rep.n = g.order_exponent();
    rep.table = oracle_census(g, oracle_cap);
    rep.method = "oracle";
  };
  auto run_formula = [&] {
    if (!family)
      throw std::invalid_argument("--method formula applies only to the D8 x C2^m and C4 x C2^m families");
    rep.n = family_n;
    rep.table = census_from_formula(*family, family_n);
    rep.method = "formula";
  };
  auto run_goursat = [&] {
    GroupSpec core_spec;
    if (core_parts.empty()) {
      core_spec = GroupSpec::elementary(0);
    } else {
      core_spec = *core_parts[0];
      for (std::size_t i = 1; i < core_parts.size(); ++i)
        core_spec = GroupSpec::direct(core_spec, *core_parts[i]);
    }
    const GroupTable a = build(core_spec);
    if (a.order() > oracle_cap)
      throw std::invalid_argument("goursat: the non-elementary core exceeds the oracle cap");
    rep.n = a.order_exponent() + elem_rank;
    rep.table = census_from_goursat(goursat_input(a, elem_rank, oracle_cap));
    rep.method = "goursat";
  };

  if (method == "oracle") {
    run_oracle();
  } else if (method == "formula") {
    run_formula();
  } else if (method == "goursat") {
    run_goursat();
  } else if (method == "auto") {
    const int n = spec_order_exponent(spec);
    if ((1LL << n) <= oracle_cap)
      run_oracle();
    else if (family)
      run_formula();
    else
      run_goursat();
  } else {
    throw CLI::ValidationError("--method", "expected oracle, formula, goursat, auto or all");
  }
  return rep;
}

int cmd_census(const std::string& spec_text, const std::string& method, Format fmt,
               int oracle_cap) {
  const GroupSpec spec = parse_spec(spec_text);
  if (method == "all") {
    // Run every applicable method and insist their tables agree.
    std::vector<CensusReport> reports;
    reports.push_back(compute_census(spec, "auto", oracle_cap));
    int family_n = 0;
    if (closed_form_family(spec, &family_n))
      reports.push_back(compute_census(spec, "formula", oracle_cap));
    try {
      reports.push_back(compute_census(spec, "goursat", oracle_cap));
    } catch (const std::invalid_argument&) {
    }
    bool mismatch = false;
    for (std::size_t i = 1; i < reports.size(); ++i)
      if (reports[i].table.n != reports[0].table.n || reports[i].table.s != reports[0].table.s) {
        mismatch = true;
        std::cerr << "MISMATCH between " << reports[0].method << " and " << reports[i].method
                  << " for " << reports[0].label << "\n";
      }
    emit_census(reports[0], fmt);
    std::cout << (mismatch ? "methods disagree: " : "methods agree: ");
    for (std::size_t i = 0; i < reports.size(); ++i)
      std::cout << (i ? ", " : "") << reports[i].method;
    std::cout << "\n";
    return mismatch ? 1 : 0;
  }
  emit_census(compute_census(spec, method, oracle_cap), fmt);
  return 0;
}

int cmd_lattice(const std::string& spec_text, bool dump, int oracle_cap) {
  const GroupSpec spec = parse_spec(spec_text);
  const GroupTable g = build(spec);
  const SubgroupLattice lat = enumerate_lattice(g, oracle_cap);
  std::cout << g.label() << "  (order 2^" << g.order_exponent() << ")\n";
  for (int k = 0; k <= lat.top_level(); ++k) {
    std::cout << "  level " << k << ": " << lat.level(k).size() << " subgroups\n";
    if (dump && g.order() <= 64)
      for (const SubgroupSet& h : lat.level(k)) {
        std::cout << "    {";
        bool first = true;
        for (int m : h.members()) {
          std::cout << (first ? "" : ",") << m;
          first = false;
        }
        std::cout << "}\n";
      }
  }
  std::cout << "  total " << lat.total_subgroups() << "\n";
  return 0;
}

int cmd_sections(const std::string& spec_text, int alpha, int beta, bool split, bool compare,
                 Format fmt, int oracle_cap) {
  const GroupSpec spec = parse_spec(spec_text);
  const GroupTable g = build(spec);
  const int n = g.order_exponent();
  const SubgroupLattice lat = enumerate_lattice(g, oracle_cap);
  const SectionCensus sc = section_census(lat, split);

  // Reference column: D8 x C2^{n-3}, counted through its standard form.
  std::vector<BigUint> ref_e;
  if (compare && n >= 3) ref_e = e_profile(FormType::plus(1, n - 3), n + 1);

  bool violation = false;
  json rows = json::array();
  if (fmt == Format::kText) {
    std::cout << g.label() << " elementary abelian sections";
    if (compare && n >= 3) std::cout << "  (reference: D8 x C2^" << n - 3 << ")";
    std::cout << "\n";
    std::cout << "  alpha beta      count";
    if (split) std::cout << "         S1       S2       S3       S4";
    if (compare && n >= 3) std::cout << "        ref  verdict";
    std::cout << "\n";
  } else if (fmt == Format::kCsv) {
    std::cout << "alpha,beta,count";
    if (split) std::cout << ",s1,s2,s3,s4";
    if (compare && n >= 3) std::cout << ",ref,verdict";
    std::cout << "\n";
  }
  for (const auto& [ab, cell] : sc.cells) {
    if (alpha >= 0 && ab.first != alpha) continue;
    if (beta >= 0 && ab.second != beta) continue;
    BigUint ref;
    if (compare && n >= 3) ref = section_census_formulas(ref_e, n, ab.first, ab.second).total();
    const bool ok = !compare || n < 3 || BigUint(static_cast<std::uint64_t>(cell.total)) <= ref;
    violation = violation || !ok;
    switch (fmt) {
      case Format::kText: {
        std::printf("  %5d %4d %10lld", ab.first, ab.second, static_cast<long long>(cell.total));
        if (split)
          std::printf(" %10lld %8lld %8lld %8lld", static_cast<long long>(cell.s1),
                      static_cast<long long>(cell.s2), static_cast<long long>(cell.s3),
                      static_cast<long long>(cell.s4));
        if (compare && n >= 3) std::printf(" %10s  %s", ref.to_string().c_str(), ok ? "<=" : ">!");
        std::printf("\n");
        break;
      }
      case Format::kCsv: {
        std::cout << ab.first << "," << ab.second << "," << cell.total;
        if (split) std::cout << "," << cell.s1 << "," << cell.s2 << "," << cell.s3 << "," << cell.s4;
        if (compare && n >= 3) std::cout << "," << ref.to_string() << "," << (ok ? "le" : "gt");
        std::cout << "\n";
        break;
      }
      case Format::kJson: {
        json row = {{"alpha", ab.first}, {"beta", ab.second}, {"count", std::to_string(cell.total)}};
        if (split) {
          row["s1"] = std::to_string(cell.s1);
          row["s2"] = std::to_string(cell.s2);
          row["s3"] = std::to_string(cell.s3);
          row["s4"] = std::to_string(cell.s4);
        }
        if (compare && n >= 3) {
          row["ref"] = ref.to_string();
          row["dominated"] = ok;
        }
        rows.push_back(std::move(row));
        break;
      }
    }
  }
  if (fmt == Format::kJson) {
    json j;
    j["label"] = g.label();
    j["n"] = n;
    j["rows"] = std::move(rows);
    j["method"] = "oracle";
    j["version"] = kVersion;
    std::cout << j.dump(2) << "\n";
  }
  return violation ? 1 : 0;
}

int cmd_quadform(const std::string& type, int r, int m0, int max_d, Format fmt) {
  FormType t;
  if (type == "plus")
    t = FormType::plus(r, m0);
  else if (type == "minus")
    t = FormType::minus(r, m0);
  else if (type == "almost")
    t = FormType::almost(r, m0);
  else
    throw CLI::ValidationError("--type", "expected plus, minus or almost");
  if (max_d < 0) max_d = t.r + 1;

  std::vector<std::pair<int, BigUint>> rows;
  for (int i = 2; i <= max_d + 1; ++i) rows.emplace_back(i, count_totally_singular(t, i - 1));

  std::optional<BigUint> lattice;
  if (m0 == 0 && t.r >= 1) {
    std::vector<BigUint> e(static_cast<std::size_t>(t.r) + 2);
    e[1] = 1;
    for (int i = 2; i <= t.r + 1; ++i)
      e[static_cast<std::size_t>(i)] = count_totally_singular(t, i - 1);
    lattice = lattice_size_extraspecial(t.r, e, t.kind == FormType::Kind::kAlmost);
  }

  switch (fmt) {
    case Format::kJson: {
      json j;
      j["type"] = t.to_string();
      j["rows"] = json::array();
      for (const auto& [i, v] : rows) j["rows"].push_back({{"i", i}, {"e_i", v.to_string()}});
      if (lattice) j["lattice_size"] = lattice->to_string();
      j["version"] = kVersion;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      std::cout << "i,e_i\n";
      for (const auto& [i, v] : rows) std::cout << i << "," << v.to_string() << "\n";
      if (lattice) std::cout << "lattice_size," << lattice->to_string() << "\n";
      break;
    }
    case Format::kText: {
      std::cout << "form " << t.to_string() << " (dim " << t.dim() << ")\n";
      for (const auto& [i, v] : rows) std::cout << "  e_" << i << " = " << v.to_string() << "\n";
      if (lattice) std::cout << "  |L| = " << lattice->to_string() << "\n";
      break;
    }
  }
  return 0;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(text);
    return {n, n};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int cmd_verify(const std::string& check_token, const std::string& n_range,
               const std::vector<std::string>& family_tokens, int oracle_cap) {
  const std::optional<CheckId> check = check_from_token(check_token);
  if (!check)
    throw CLI::ValidationError("check", "expected one of thm11, lem22, lem14, cor29");
  VerifyOptions opt;
  std::tie(opt.n_min, opt.n_max) = parse_n_range(n_range);
  if (opt.n_min < 3 || opt.n_max < opt.n_min)
    throw CLI::ValidationError("--n", "range must be within 3..12");
  opt.oracle_cap = oracle_cap;
  if (!family_tokens.empty()) {
    opt.families.clear();
    for (const std::string& tok : family_tokens) {
      const std::optional<FamilyId> fam = family_from_token(tok);
      if (!fam)
        throw CLI::ValidationError("--families",
                                   "expected abelian, genextra or central-products");
      opt.families.push_back(*fam);
    }
  }
  const VerifyReport rep = run_verification(*check, opt);
  for (const std::string& line : rep.header) std::cout << "# " << line << "\n";
  for (const InstanceRow& row : rep.rows) {
    std::printf("%-4s  n=%d  %-28s %-14s %s\n", row.status.c_str(), row.n, row.label.c_str(),
                row.method.c_str(), row.note.c_str());
  }
  const int failures =
      static_cast<int>(std::count_if(rep.rows.begin(), rep.rows.end(),
                                     [](const InstanceRow& r) { return r.status == "FAIL"; }));
  std::cout << rep.rows.size() << " instances, " << failures << " failures\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subcensus: exact subgroup censuses of finite 2-groups"};
  app.require_subcommand(1);

  std::string spec_text, method = "auto", format_text = "text";
  int oracle_cap = kDefaultOracleCap;

  CLI::App* census = app.add_subcommand("census", "subgroup counts s_k of a group");
  census->add_option("spec", spec_text, "group expression, e.g. \"D8 * D8\" or \"D8 x C2^3\"")
      ->required();
  census->add_option("--method", method, "oracle | formula | goursat | auto | all");
  census->add_option("--format", format_text, "text | csv | json");
  census->add_option("--oracle-cap", oracle_cap, "largest order enumerated directly");

  bool dump = false;
  CLI::App* lattice = app.add_subcommand("lattice", "subgroup lattice level sizes");
  lattice->add_option("spec", spec_text)->required();
  lattice->add_flag("--dump", dump, "list subgroup member indices (order <= 64)");
  lattice->add_option("--oracle-cap", oracle_cap);

  int alpha = -1, beta = -1, r = 1, m0 = 0, max_d = -1;
  bool split = false, no_compare = false;
  CLI::App* sections = app.add_subcommand("sections", "elementary abelian section census");
  sections->add_option("spec", spec_text)->required();
  sections->add_option("--alpha", alpha, "restrict to one quotient rank");
  sections->add_option("--beta", beta, "restrict to one |H1| exponent");
  sections->add_flag("--split", split, "split counts into the four classes");
  sections->add_flag("--no-compare", no_compare, "omit the reference comparison column");
  sections->add_option("--format", format_text);
  sections->add_option("--oracle-cap", oracle_cap);

  std::string form_type = "plus";
  CLI::App* quadform = app.add_subcommand("quadform", "totally singular counts e_i of a standard form");
  quadform->add_option("--type", form_type, "plus | minus | almost");
  quadform->add_option("--r", r, "number of hyperbolic planes");
  quadform->add_option("--m0", m0, "zero-radical rank");
  quadform->add_option("--max-d", max_d, "largest subspace dimension to count");
  quadform->add_option("--format", format_text);

  std::string check_token, n_range = "3..6";
  std::vector<std::string> family_tokens;
  CLI::App* verify = app.add_subcommand("verify", "instance verification over group families");
  verify->add_option("check", check_token, "thm11 | lem22 | lem14 | cor29")->required();
  verify->add_option("--n", n_range, "order exponent or range, e.g. 5 or 3..8");
  verify->add_option("--families", family_tokens, "abelian, genextra, central-products")
      ->delimiter(',');
  verify->add_option("--oracle-cap", oracle_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format fmt = parse_format(format_text);
    if (census->parsed()) return cmd_census(spec_text, method, fmt, oracle_cap);
    if (lattice->parsed()) return cmd_lattice(spec_text, dump, oracle_cap);
    if (sections->parsed())
      return cmd_sections(spec_text, alpha, beta, split, !no_compare, fmt, oracle_cap);
    if (quadform->parsed()) return cmd_quadform(form_type, r, m0, max_d, fmt);
    if (verify->parsed()) return cmd_verify(check_token, n_range, family_tokens, oracle_cap);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
