#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ogs/colored_perm.hpp"
#include "ogs/errors.hpp"
#include "ogs/group.hpp"

using namespace ogs;

namespace {

ColoredPerm t_element(int i, int n, int r, int lead_color = 1) {
  std::vector<int> perm(n), colors(n, 0);
  std::iota(perm.begin(), perm.end(), 1);
  if (i >= 1) {
    perm[0] = i + 1;
    for (int j = 1; j <= i; ++j) perm[j] = j;
  }
  colors[0] = lead_color % r;
  return ColoredPerm(colors, perm, r);
}

} // namespace

TEST_CASE("identity composes neutrally") {
  const GroupSpec spec(3, 1, 3);
  const ColoredPerm id = ColoredPerm::identity(3, 3);
  for (const auto& g : enumerate_group(spec)) {
    CHECK(compose(id, g) == g);
    CHECK(compose(g, id) == g);
  }
}

TEST_CASE("colors add on a fixed permutation") {
  // tau_0^2 in G(3,2)
  const ColoredPerm tau0({1, 0}, {1, 2}, 3);
  CHECK(compose(tau0, tau0) == ColoredPerm({2, 0}, {1, 2}, 3));
}

TEST_CASE("composition rejects mismatched parameters") {
  CHECK_THROWS_AS(compose(ColoredPerm::identity(2, 2), ColoredPerm::identity(3, 2)),
                  invalid_argument_error);
  CHECK_THROWS_AS(compose(ColoredPerm::identity(2, 2), ColoredPerm::identity(2, 3)),
                  invalid_argument_error);
}

TEST_CASE("inverse and identity") {
  CHECK(inverse(ColoredPerm::identity(4, 2)) == ColoredPerm::identity(4, 2));
  CHECK(inverse(ColoredPerm({1, 0}, {1, 2}, 3)) == ColoredPerm({2, 0}, {1, 2}, 3));
}

TEST_CASE("group axioms exhaustively on G(2,1,3)") {
  const auto group = enumerate_group(GroupSpec(2, 1, 3));
  REQUIRE(group.size() == 48);
  const ColoredPerm id = ColoredPerm::identity(3, 2);
  for (const auto& g : group) CHECK(compose(g, inverse(g)) == id);
  // associativity on a deterministic sample of triples
  for (std::size_t i = 0; i < group.size(); i += 7)
    for (std::size_t j = 1; j < group.size(); j += 11)
      for (std::size_t k = 2; k < group.size(); k += 13)
        CHECK(compose(compose(group[i], group[j]), group[k]) ==
              compose(group[i], compose(group[j], group[k])));
}

TEST_CASE("convention pin: o(tau_i) = r(i+1)") {
  for (int r : {2, 3, 4})
    for (int n : {2, 3, 4})
      for (int i = 0; i < n; ++i)
        CHECK(element_order(t_element(i, n, r)) == static_cast<long long>(r) * (i + 1));
}

TEST_CASE("element orders") {
  CHECK(element_order(ColoredPerm::identity(3, 2)) == 1);
  CHECK(element_order(ColoredPerm({1, 1, 0}, {2, 1, 3}, 2)) == 2);
}

TEST_CASE("in_subgroup is the color-sum criterion") {
  const GroupSpec spec223(2, 2, 3);
  CHECK(in_subgroup(ColoredPerm::identity(3, 2), spec223));
  CHECK_FALSE(in_subgroup(ColoredPerm({1, 0, 0}, {1, 2, 3}, 2), spec223));

  const GroupSpec spec422(4, 2, 2);
  int count = 0;
  for (const auto& g : enumerate_group(GroupSpec(4, 1, 2)))
    if (in_subgroup(g, spec422)) ++count;
  CHECK(count == 16);
}

TEST_CASE("color-sum map is a homomorphism to Z_p") {
  const GroupSpec ambient(4, 1, 2);
  const GroupSpec sub(4, 2, 2);
  const auto group = enumerate_group(ambient);
  for (const auto& g : group)
    for (const auto& h : group)
      if (in_subgroup(g, sub) && in_subgroup(h, sub)) CHECK(in_subgroup(compose(g, h), sub));
}

TEST_CASE("enumerate_group sizes and determinism") {
  CHECK(enumerate_group(GroupSpec(1, 1, 3)).size() == 6);
  CHECK(enumerate_group(GroupSpec(2, 1, 2)).size() == 8);
  CHECK(enumerate_group(GroupSpec(6, 3, 2)).size() == 24);
  const auto a = enumerate_group(GroupSpec(3, 1, 3));
  const auto b = enumerate_group(GroupSpec(3, 1, 3));
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("enumerate_group is closed under compose and inverse") {
  const auto group = enumerate_group(GroupSpec(6, 3, 2));
  std::vector<ColoredPerm> sorted = group;
  for (const auto& g : group) {
    CHECK(std::binary_search(sorted.begin(), sorted.end(), inverse(g)));
    CHECK(std::binary_search(sorted.begin(), sorted.end(), compose(g, group[5])));
  }
}

TEST_CASE("enumerate_group respects the ceiling") {
  CHECK_THROWS_AS(enumerate_group(GroupSpec(10, 1, 8), 1000), size_limit_error);
}

TEST_CASE("GroupSpec validation and derived quantities") {
  CHECK_THROWS_AS(GroupSpec(4, 3, 2), invalid_argument_error);
  CHECK(GroupSpec(4, 2, 3).order() == 192);
  CHECK(GroupSpec(4, 2, 2).gcd_flag() == 2);
  CHECK(GroupSpec(6, 3, 2).gcd_flag() == 1);
}

TEST_CASE("closure of identity and of generating sets") {
  const ColoredPerm id = ColoredPerm::identity(3, 2);
  CHECK(closure({id}) == std::vector<ColoredPerm>{id});

  // tau-basis of G(3,2) generates all 18 elements
  std::vector<ColoredPerm> taus = {t_element(1, 2, 3), t_element(0, 2, 3)};
  CHECK(closure(taus).size() == 18);
  CHECK(closure(taus) == enumerate_group(GroupSpec(3, 1, 2)));

  // u_0, u_1 of G(4,2,3) generate a copy of G(4,2)
  const ColoredPerm u0({1, 0, 3}, {1, 2, 3}, 4);
  const ColoredPerm u1({1, 0, 3}, {2, 1, 3}, 4);
  CHECK(closure({u0, u1}).size() == 32);
}

TEST_CASE("parse and format round-trip") {
  CHECK(format_element(ColoredPerm::identity(3, 3)) == "c=[0,0,0];w=[1,2,3]");
  const ColoredPerm beta2 = parse_element("[ -2, 1, 3 ]", 2);
  CHECK(beta2 == ColoredPerm({0, 1, 0}, {2, 1, 3}, 2));
  CHECK(format_element(beta2) == "[-2,1,3]");

  for (const auto& g : enumerate_group(GroupSpec(2, 1, 3)))
    CHECK(parse_element(format_element(g), 2) == g);
  for (const auto& g : enumerate_group(GroupSpec(3, 1, 2)))
    CHECK(parse_element(format_element(g), 3) == g);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_element("[1,1]", 2), invalid_argument_error);     // not a bijection
  CHECK_THROWS_AS(parse_element("[1,4]", 2), invalid_argument_error);     // out of range
  CHECK_THROWS_AS(parse_element("[-1,2]", 1), invalid_argument_error);    // sign needs r >= 2
  CHECK_THROWS_AS(parse_element("c=[0,3];w=[1,2]", 3), invalid_argument_error);
  CHECK_THROWS_AS(parse_element("c=[0,0];w=[1,2] junk", 3), invalid_argument_error);
  CHECK_THROWS_AS(parse_element("[1,2", 2), invalid_argument_error);
}
