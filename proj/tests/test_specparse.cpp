#include <doctest.h>

#include <random>
#include <string>

#include "subcensus/specparse.hpp"

using namespace subcensus;

TEST_CASE("grammar examples") {
  CHECK(parse_spec("D8 x C2^3") ==
        GroupSpec::direct(GroupSpec::atom(GroupSpec::Leaf::kD8), GroupSpec::elementary(3)));
  CHECK(parse_spec("Q8 * D8^{*2}") ==
        GroupSpec::central(GroupSpec::atom(GroupSpec::Leaf::kQ8),
                           GroupSpec::central_power(GroupSpec::atom(GroupSpec::Leaf::kD8), 2)));
  CHECK(parse_spec("D8^{*2} * C4") ==
        GroupSpec::central(GroupSpec::central_power(GroupSpec::atom(GroupSpec::Leaf::kD8), 2),
                           GroupSpec::atom(GroupSpec::Leaf::kC4)));
  CHECK(build(parse_spec("Q8 * D8^{*2}")).order() == 128);
}

TEST_CASE("central product binds tighter than direct product") {
  const GroupSpec s = parse_spec("D8 * C4 x C2");
  REQUIRE(s.kind == GroupSpec::Kind::kDirect);
  CHECK(s.children[0] == parse_spec("D8 * C4"));
  CHECK(s.children[1] == GroupSpec::atom(GroupSpec::Leaf::kC2));
  CHECK(parse_spec("D8 * (C4 x C2)") != s);
}

TEST_CASE("products fold left") {
  CHECK(parse_spec("C2 x C4 x C8") ==
        GroupSpec::direct(GroupSpec::direct(GroupSpec::atom(GroupSpec::Leaf::kC2),
                                            GroupSpec::atom(GroupSpec::Leaf::kC4)),
                          GroupSpec::atom(GroupSpec::Leaf::kC8)));
}

TEST_CASE("C2 powers normalize to elementary abelian atoms") {
  CHECK(parse_spec("C2^4") == GroupSpec::elementary(4));
  CHECK(parse_spec("C2^1") == GroupSpec::atom(GroupSpec::Leaf::kC2));
  CHECK(build(parse_spec("C2^4")).order() == 16);
}

TEST_CASE("syntax errors carry byte offsets") {
  const auto offset_of = [](const std::string& text) {
    try {
      parse_spec(text);
    } catch (const ParseError& e) {
      return e.offset;
    }
    return -1;
  };
  CHECK(offset_of("D8 *") == 4);
  CHECK(offset_of("D8 x") == 4);
  CHECK(offset_of("Z8") == 0);
  CHECK(offset_of("D8 ) C2") == 3);
  CHECK(offset_of("(D8 x C2") == 8);
  CHECK(offset_of("D8^{2}") == 4);
  CHECK(offset_of("D8^0") == 3);
  CHECK(offset_of("") == 0);
}

TEST_CASE("central products of wide elementary abelian groups fail at build time") {
  const GroupSpec s = parse_spec("C2^2 * D8");
  CHECK_THROWS_AS(build(s), std::invalid_argument);
}

TEST_CASE("pretty-print round trip on a corpus of random trees") {
  std::mt19937_64 rng(2024);
  const auto random_tree = [&](auto&& self, int depth) -> GroupSpec {
    const int pick = static_cast<int>(rng() % (depth > 2 ? 3 : 6));
    switch (pick) {
      case 0: return GroupSpec::atom(GroupSpec::Leaf::kD8);
      case 1: return GroupSpec::atom(GroupSpec::Leaf::kQ8);
      case 2:
        return rng() % 2 ? GroupSpec::atom(GroupSpec::Leaf::kC4)
                         : GroupSpec::elementary(1 + static_cast<int>(rng() % 4));
      case 3: return GroupSpec::direct(self(self, depth + 1), self(self, depth + 1));
      case 4: return GroupSpec::central(self(self, depth + 1), self(self, depth + 1));
      default:
        return rng() % 2
                   ? GroupSpec::direct_power(self(self, depth + 1), 2 + static_cast<int>(rng() % 2))
                   : GroupSpec::central_power(self(self, depth + 1), 2 + static_cast<int>(rng() % 2));
    }
  };
  for (int t = 0; t < 50; ++t) {
    const GroupSpec tree = random_tree(random_tree, 0);
    const std::string printed = to_string(tree);
    CAPTURE(printed);
    CHECK(parse_spec(printed) == tree);
  }
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_spec("  D8*C4xC2 ") == parse_spec("D8 * C4 x C2"));
}

TEST_CASE("spec order exponents are computed without building") {
  CHECK(spec_order_exponent(parse_spec("Q8 * D8^{*2}")) == 7);
  CHECK(spec_order_exponent(parse_spec("D8 x C2^12")) == 15);
  CHECK(spec_order_exponent(parse_spec("D8^{*3} * C4")) == 8);
  CHECK(spec_order_exponent(parse_spec("C8 x C4 x C2")) == 6);
  for (const char* text : {"D8 * D8", "Q8 * D8 x C2^2", "D8^2", "(D8 * C4)^2"}) {
    const GroupSpec s = parse_spec(text);
    CHECK(spec_order_exponent(s) == build(s).order_exponent());
  }
}
