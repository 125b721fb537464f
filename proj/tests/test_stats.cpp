#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogs/errors.hpp"
#include "ogs/stats.hpp"
#include "ogs/verify.hpp"

using namespace ogs;

namespace {

ColoredPerm plain(std::vector<int> perm) {
  const std::size_t n = perm.size();
  return ColoredPerm(std::vector<int>(n, 0), std::move(perm), 1);
}

QPolynomial from_ints(std::vector<long long> v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return QPolynomial(std::move(c));
}

} // namespace

TEST_CASE("descent set and maj") {
  CHECK(descent_set(plain({1, 2, 3})).empty());
  CHECK(descent_set(plain({3, 2, 1})) == std::vector<int>{1, 2});
  CHECK(maj(plain({3, 2, 1})) == 3);
  CHECK(maj(plain({1, 2, 3})) == 0);
  CHECK_THROWS_AS(descent_set(ColoredPerm::identity(3, 2)), invalid_argument_error);
}

TEST_CASE("Eulerian distribution over S_4") {
  std::vector<int> counts(4, 0);
  for (const auto& pi : enumerate_group(GroupSpec(1, 1, 4)))
    ++counts[descent_set(pi).size()];
  CHECK(counts == std::vector<int>{1, 11, 11, 1});
}

TEST_CASE("maj generating polynomial over S_3 is [2][3]") {
  QPolynomial gen;
  for (const auto& pi : enumerate_group(GroupSpec(1, 1, 3)))
    gen.add_term(static_cast<int>(maj(pi)));
  CHECK(gen == q_product({2, 3}));
}

TEST_CASE("inversions match BFS length on S_5") {
  const auto s5 = enumerate_group(GroupSpec(1, 1, 5));
  const auto dist = bfs_length(s5, coxeter_generators_a(5));
  for (const auto& pi : s5) CHECK(inv_length(pi) == dist.at(pi));
  CHECK(inv_length(plain({3, 2, 1})) == 3);
}

TEST_CASE("maj and inversions are equidistributed up to S_6") {
  for (int n = 1; n <= 6; ++n) {
    QPolynomial maj_gen, inv_gen;
    for (const auto& pi : enumerate_group(GroupSpec(1, 1, n))) {
      maj_gen.add_term(static_cast<int>(maj(pi)));
      inv_gen.add_term(static_cast<int>(inv_length(pi)));
    }
    CHECK(maj_gen == inv_gen);
  }
}

TEST_CASE("fmaj equals maj on the t-basis, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    const Basis t = sn_basis(n);
    for (const auto& pi : enumerate_group(GroupSpec(1, 1, n)))
      CHECK(fmaj(pi, t) == maj(pi));
  }
}

TEST_CASE("fmaj of identity and maximal fmaj") {
  const GroupSpec spec(4, 2, 3);
  const Basis u = rpn_basis(spec);
  CHECK(fmaj(ColoredPerm::identity(3, 4), u) == 0);
  long long max_fmaj = 0;
  for (long long m : u.moduli) max_fmaj += m - 1;
  const QPolynomial fm = fmaj_polynomial(u, enumerate_group(spec));
  CHECK(fm.degree() == max_fmaj);
  CHECK(fm.coeff(static_cast<int>(max_fmaj)) == 1);
}

TEST_CASE("fmaj_polynomial known expansions") {
  CHECK(fmaj_polynomial(sn_basis(1), enumerate_group(GroupSpec(1, 1, 1))) ==
        QPolynomial::one());
  CHECK(fmaj_polynomial(sn_basis(3), enumerate_group(GroupSpec(1, 1, 3))) ==
        from_ints({1, 2, 2, 1}));
  CHECK(fmaj_polynomial(wreath_basis(2, 2), enumerate_group(GroupSpec(2, 1, 2))) ==
        from_ints({1, 2, 2, 2, 1}));
}

TEST_CASE("fmaj_polynomial rejects a broken basis") {
  Basis bad = sn_basis(3);
  bad.elements[1] = bad.elements[0];
  CHECK_THROWS_AS(fmaj_polynomial(bad, enumerate_group(GroupSpec(1, 1, 3))), internal_fault);
}

TEST_CASE("bfs_length basics") {
  const auto b2 = enumerate_group(GroupSpec(2, 1, 2));
  const auto dist = bfs_length(b2, coxeter_generators_b(2));
  CHECK(dist.at(ColoredPerm::identity(2, 2)) == 0);
  long long longest = 0;
  for (const auto& [g, d] : dist) longest = std::max(longest, d);
  CHECK(longest == 4);
}

TEST_CASE("Poincare series of S_4 and B_3") {
  const auto s4 = enumerate_group(GroupSpec(1, 1, 4));
  CHECK(poincare_polynomial(s4, coxeter_generators_a(4)) == q_product({2, 3, 4}));

  const auto b3 = enumerate_group(GroupSpec(2, 1, 3));
  const QPolynomial poin = poincare_polynomial(b3, coxeter_generators_b(3));
  CHECK(poin == q_product({2, 4, 6}));
  CHECK(poin == from_ints({1, 3, 5, 7, 8, 8, 7, 5, 3, 1}));
}

TEST_CASE("Poincare of the trivial group") {
  const auto s1 = enumerate_group(GroupSpec(1, 1, 1));
  CHECK(poincare_polynomial(s1, {}) == QPolynomial::one());
}

TEST_CASE("D_3 is S_4 in disguise") {
  const auto d3 = enumerate_group(GroupSpec(2, 2, 3));
  const auto s4 = enumerate_group(GroupSpec(1, 1, 4));
  CHECK(poincare_polynomial(d3, coxeter_generators_d(3)) ==
        poincare_polynomial(s4, coxeter_generators_a(4)));
}

TEST_CASE("Poincare polynomials are palindromic for Weyl groups") {
  CHECK(poincare_polynomial(enumerate_group(GroupSpec(1, 1, 5)), coxeter_generators_a(5))
            .palindromic());
  CHECK(poincare_polynomial(enumerate_group(GroupSpec(2, 1, 3)), coxeter_generators_b(3))
            .palindromic());
  CHECK(poincare_polynomial(enumerate_group(GroupSpec(2, 2, 4)), coxeter_generators_d(4))
            .palindromic());
}

TEST_CASE("bfs_length reports non-generating sets") {
  const auto s4 = enumerate_group(GroupSpec(1, 1, 4));
  // a single transposition does not generate S_4
  CHECK_THROWS_AS(bfs_length(s4, {plain({2, 1, 3, 4})}), invalid_argument_error);
}

TEST_CASE("hilbert polynomial formula") {
  CHECK(hilbert_polynomial(GroupSpec(1, 1, 4)) == q_product({1, 2, 3, 4}));
  CHECK(hilbert_polynomial(GroupSpec(2, 1, 2)) == from_ints({1, 2, 2, 2, 1}));
  CHECK(hilbert_polynomial(GroupSpec(4, 2, 2)) == q_product({4, 4}));
  CHECK(hilbert_polynomial(GroupSpec(9, 3, 3)) == q_product({9, 18, 9}));
  CHECK(hilbert_polynomial(GroupSpec(6, 3, 1)) == q_integer(2));
  CHECK(hilbert_polynomial(GroupSpec(4, 2, 3)).eval_at_one() == GroupSpec(4, 2, 3).order());
}

TEST_CASE("fmaj polynomial equals Hilbert polynomial on the matrix") {
  for (const auto& [r, p, n] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 5}, {2, 1, 4}, {2, 2, 4}, {3, 1, 3}, {4, 2, 3}, {6, 2, 3}, {6, 3, 2}}) {
    const GroupSpec spec(r, p, n);
    CHECK(fmaj_polynomial(rpn_basis(spec), enumerate_group(spec)) ==
          hilbert_polynomial(spec));
  }
}
