#include <doctest.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "subcensus/oracle.hpp"
#include "subcensus/specparse.hpp"

using namespace subcensus;

namespace {

// Independent section oracle: scan all lattice pairs, check normality and the
// elementary-abelian quotient directly on the coset table.
std::map<std::pair<int, int>, std::int64_t> naive_sections(const GroupTable& g) {
  const SubgroupLattice lat = enumerate_lattice(g);
  std::map<std::pair<int, int>, std::int64_t> out;
  for (int k2 = 0; k2 <= lat.top_level(); ++k2)
    for (const SubgroupSet& h2 : lat.level(k2))
      for (int k1 = 0; k1 <= k2; ++k1)
        for (const SubgroupSet& h1 : lat.level(k1)) {
          if (!h1.subset_of(h2)) continue;
          if (!h1.normal_in(h2)) continue;
          // Quotient of the sub-table spanned by H2.
          bool elementary = true;
          for (int a : h2.members()) {
            if (!h1.contains(g.op(a, a))) elementary = false;
            for (int b : h2.members())
              if (!h1.contains(g.commutator(a, b))) elementary = false;
          }
          if (elementary) ++out[{k2 - k1, k1}];
        }
  return out;
}

}  // namespace

TEST_CASE("lattice level sizes of the small named groups") {
  const std::vector<std::size_t> d8 = {1, 5, 3, 1};
  const std::vector<std::size_t> q8 = {1, 1, 3, 1};
  const SubgroupLattice latd = enumerate_lattice(GroupTable::dihedral8());
  const SubgroupLattice latq = enumerate_lattice(GroupTable::quaternion8());
  for (int k = 0; k <= 3; ++k) {
    CHECK(latd.level(k).size() == d8[static_cast<std::size_t>(k)]);
    CHECK(latq.level(k).size() == q8[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("elementary abelian lattices follow the Gaussian binomials") {
  for (int m = 0; m <= 7; ++m) {
    const SubgroupLattice lat = enumerate_lattice(GroupTable::elementary_abelian(m));
    for (int k = 0; k <= m; ++k)
      CHECK(BigUint(lat.level(k).size()) == gaussian_binomial(m, k));
  }
}

TEST_CASE("golden census totals of the worked examples") {
  CHECK(oracle_census(build(parse_spec("D8 * D8"))).total().to_u64() == 110);
  CHECK(oracle_census(build(parse_spec("Q8 * D8"))).total().to_u64() == 78);
  CHECK(oracle_census(build(parse_spec("D8 * C4"))).total().to_u64() == 23);
}

TEST_CASE("census sanity: s_0 = s_n = 1 and every s_k is odd") {
  for (const char* spec : {"D8", "Q8", "C4 x C4", "D8 * D8", "Q8 * D8", "D8 x C2^2", "C8 x C2",
                           "D8 * C4", "(D8 * C4) x C2"}) {
    const CensusTable c = oracle_census(build(parse_spec(spec)));
    CAPTURE(spec);
    CHECK(c.s.front().to_u64() == 1);
    CHECK(c.s.back().to_u64() == 1);
    for (const BigUint& v : c.s) {
      BigUint odd_check = v;
      CHECK(odd_check.divmod_small(2) == 1);
    }
  }
}

TEST_CASE("the cover relation connects adjacent levels completely") {
  const GroupTable g = build(parse_spec("D8 x C2"));
  const SubgroupLattice lat = enumerate_lattice(g);
  const auto covers = lat.covers();
  for (int k = 0; k < lat.top_level(); ++k) {
    REQUIRE(covers[static_cast<std::size_t>(k)].size() == lat.level(k).size());
    for (std::size_t i = 0; i < lat.level(k).size(); ++i) {
      CHECK(!covers[static_cast<std::size_t>(k)][i].empty());
      for (int j : covers[static_cast<std::size_t>(k)][i])
        CHECK(lat.level(k)[i].subset_of(lat.level(k + 1)[static_cast<std::size_t>(j)]));
    }
  }
}

TEST_CASE("oracle cap is enforced and configurable") {
  CHECK_THROWS_AS(enumerate_lattice(GroupTable::cyclic(512)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_lattice(GroupTable::cyclic(2), 1024), std::invalid_argument);
  CHECK(enumerate_lattice(GroupTable::cyclic(512), 512).total_subgroups() == 10);
}

TEST_CASE("cyclic censuses") {
  SUBCASE("|L1(D8)| = 7") {
    CHECK(cyclic_subgroup_total(GroupTable::dihedral8()) == 7);
  }
  SUBCASE("C4 has one cyclic subgroup each of orders 2 and 4") {
    const auto c = cyclic_census(GroupTable::cyclic(4));
    CHECK(c[0] == 1);
    CHECK(c[1] == 1);
    CHECK(c[2] == 1);
  }
  SUBCASE("exponent-4 groups satisfy 2^n = 1 + c_2 + 2 c_4") {
    for (const char* spec : {"D8", "Q8", "D8 * D8", "Q8 * D8", "D8 * C4", "C4 x C2", "C4 x C4",
                             "D8 x C2^3", "(Q8 * D8) x C2"}) {
      const GroupTable g = build(parse_spec(spec));
      CAPTURE(spec);
      REQUIRE(g.exponent() == 4);
      const auto c = cyclic_census(g);
      CHECK(g.order() == 1 + c[1] + 2 * c[2]);
    }
  }
}

TEST_CASE("elementary abelian counts over the Frattini subgroup") {
  const auto e_of = [](const char* spec) {
    return elementary_abelian_over_frattini(enumerate_lattice(build(parse_spec(spec))));
  };
  SUBCASE("worked examples") {
    const auto dd = e_of("D8 * D8");
    CHECK(dd[2] == 9);
    CHECK(dd[3] == 6);
    const auto qd = e_of("Q8 * D8");
    CHECK(qd[2] == 5);
    CHECK(qd[3] == 0);
    const auto ac = e_of("D8 * C4");
    CHECK(ac[2] == 3);
  }
  SUBCASE("e_1 = 1 always, and the precondition is enforced") {
    CHECK(e_of("D8")[1] == 1);
    CHECK_THROWS_AS(e_of("C2^3"), std::invalid_argument);
  }
  SUBCASE("e_i dominance against the reference group for n = 4..7") {
    const std::vector<std::pair<int, std::vector<const char*>>> by_n = {
        {4, {"D8 * C4", "D8 x C2", "Q8 x C2"}},
        {5, {"D8 * D8", "Q8 * D8", "(D8 * C4) x C2"}},
        {6, {"D8^{*2} * C4", "(D8 * D8) x C2", "(Q8 * D8) x C2"}},
        {7, {"D8^{*3}", "Q8 * D8^{*2}", "(D8^{*2} * C4) x C2"}}};
    for (const auto& [n, specs] : by_n) {
      const auto ref = e_of(("D8 x C2^" + std::to_string(n - 3)).c_str());
      for (const char* spec : specs) {
        const auto e = e_of(spec);
        CAPTURE(spec);
        for (std::size_t i = 0; i < e.size(); ++i) CHECK(e[i] <= ref[i]);
      }
    }
  }
}

TEST_CASE("section census") {
  SUBCASE("alpha = 0 column equals the subgroup census") {
    const GroupTable g = build(parse_spec("D8 * C4"));
    const SubgroupLattice lat = enumerate_lattice(g);
    const SectionCensus sc = section_census(lat);
    const CensusTable c = census(lat);
    for (int k = 0; k <= c.n; ++k)
      CHECK(BigUint(static_cast<std::uint64_t>(sc.total(0, k))) == c.s[static_cast<std::size_t>(k)]);
  }
  SUBCASE("C2^2 has 3 sections of shape (1, 1)") {
    const SectionCensus sc = section_census(enumerate_lattice(GroupTable::elementary_abelian(2)));
    CHECK(sc.total(1, 1) == 3);
  }
  SUBCASE("worked split example at (2, 0)") {
    const SectionCensus sc =
        section_census(enumerate_lattice(build(parse_spec("D8 * D8"))), /*split=*/true);
    const SectionCell cell = sc.cells.at({2, 0});
    CHECK(cell.total == 33);  // e_2 + e_3 * 2^2
    CHECK(cell.s2 == 33);
    CHECK(cell.s1 + cell.s3 + cell.s4 == 0);
  }
  SUBCASE("classes partition every cell") {
    for (const char* spec : {"D8 * D8", "Q8 * D8", "D8 * C4", "D8 x C2"}) {
      const SectionCensus sc = section_census(enumerate_lattice(build(parse_spec(spec))), true);
      CAPTURE(spec);
      for (const auto& [ab, cell] : sc.cells)
        CHECK(cell.total == cell.s1 + cell.s2 + cell.s3 + cell.s4);
    }
  }
  SUBCASE("split requires |Phi(G)| = 2") {
    CHECK_THROWS_AS(section_census(enumerate_lattice(GroupTable::elementary_abelian(3)), true),
                    std::invalid_argument);
  }
  SUBCASE("agrees with the all-pairs direct-check oracle on small groups") {
    for (const char* spec : {"D8", "Q8", "C4 x C2", "C2^3", "D8 x C2", "D8 * C4", "C8"}) {
      const GroupTable g = build(parse_spec(spec));
      CAPTURE(spec);
      const SectionCensus fast = section_census(enumerate_lattice(g));
      const auto naive = naive_sections(g);
      CHECK(fast.cells.size() == naive.size());
      for (const auto& [ab, count] : naive) CHECK(fast.total(ab.first, ab.second) == count);
    }
  }
}

TEST_CASE("frattini dichotomy checks") {
  SUBCASE("passes on the worked central products") {
    for (const char* spec : {"D8 * D8", "Q8 * D8", "D8 * C4"}) {
      const FrattiniDichotomyReport rep = verify_frattini_dichotomy(build(parse_spec(spec)));
      CAPTURE(spec);
      CHECK(rep.pass);
      CHECK(rep.failures.empty());
    }
  }
  SUBCASE("D8: four non-normal reflection subgroups, conjugate in pairs") {
    const GroupTable d8 = GroupTable::dihedral8();
    const FrattiniDichotomyReport rep = verify_frattini_dichotomy(d8);
    CHECK(rep.pass);
    CHECK(rep.complement_count == 4);
    CHECK(rep.normal_count == 5);  // Phi, the three maximals, and D8 itself
  }
  SUBCASE("rejects groups outside its hypothesis") {
    CHECK_THROWS_AS(verify_frattini_dichotomy(GroupTable::elementary_abelian(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_frattini_dichotomy(build(parse_spec("D8 x C2"))), std::invalid_argument);
  }
}
