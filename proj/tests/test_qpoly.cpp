#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogs/errors.hpp"
#include "ogs/qpoly.hpp"

using namespace ogs;

namespace {

QPolynomial from_ints(std::vector<long long> v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return QPolynomial(std::move(c));
}

} // namespace

TEST_CASE("q_integer basics") {
  CHECK(q_integer(1) == QPolynomial::one());
  CHECK(q_integer(4).eval_at_one() == 4);
  CHECK(q_integer(4) == from_ints({1, 1, 1, 1}));
  CHECK_THROWS_AS(q_integer(0), invalid_argument_error);
}

TEST_CASE("products and degrees") {
  CHECK(q_product({2, 4}).degree() == 4);
  CHECK(q_product({2, 4}) == from_ints({1, 2, 2, 2, 1}));
  CHECK(q_product({2, 3}) == from_ints({1, 2, 2, 1}));
  CHECK(q_product({4, 4}) == from_ints({1, 2, 3, 4, 3, 2, 1}));
  CHECK(q_product({}) == QPolynomial::one());
}

TEST_CASE("canonical form trims trailing zeros") {
  CHECK(from_ints({1, 2, 0, 0}) == from_ints({1, 2}));
  CHECK(from_ints({0, 0}).is_zero());
  CHECK(from_ints({}).degree() == -1);
}

TEST_CASE("to_string format") {
  CHECK(q_product({2, 3}).to_string() == "1 + 2q + 2q^2 + q^3");
  CHECK(QPolynomial::one().to_string() == "1");
  CHECK(QPolynomial::zero().to_string() == "0");
  CHECK(from_ints({0, 1}).to_string() == "q");
  CHECK(from_ints({3, 0, 1}).to_string() == "3 + q^2");
}

TEST_CASE("exact division") {
  const QPolynomial p = q_product({2, 4, 6});
  auto quot = p.divide_exact(q_integer(4));
  REQUIRE(quot.has_value());
  CHECK(*quot == q_product({2, 6}));
  CHECK_FALSE(q_integer(3).divide_exact(q_integer(2)).has_value());
  CHECK_FALSE(from_ints({1, 0, 1}).divide_exact(q_integer(2)).has_value());
}

TEST_CASE("palindromic check") {
  CHECK(q_product({2, 4, 6}).palindromic());
  CHECK_FALSE(from_ints({1, 2}).palindromic());
}

TEST_CASE("factorization recovers known multisets") {
  CHECK(q_integer_factorization(QPolynomial::one()) == std::vector<long long>{});
  CHECK(q_integer_factorization(q_product({2, 4})) == std::vector<long long>{2, 4});
  CHECK(q_integer_factorization(q_product({4, 4})) == std::vector<long long>{4, 4});
  CHECK(q_integer_factorization(q_product({9, 18, 9})) == std::vector<long long>{9, 9, 18});
  CHECK(q_integer_factorization(q_product({6, 8, 4})) == std::vector<long long>{4, 6, 8});
}

TEST_CASE("factorization reports non-products") {
  CHECK_FALSE(q_integer_factorization(from_ints({1, 0, 1})).has_value()); // 1 + q^2
  CHECK_FALSE(q_integer_factorization(from_ints({1, 1, 0, 1})).has_value());
}

TEST_CASE("factorization round-trips on the matrix moduli") {
  const std::vector<std::vector<long long>> matrix = {
      {5, 4, 3, 2}, {8, 6, 4, 2}, {4, 6, 4, 2}, {9, 6, 3}, {6, 8, 4},
      {9, 12, 6},   {4, 6},       {3, 6, 3},    {2, 4},    {2, 3, 4},
      {2, 4, 6},    {2, 4, 6, 8}, {4, 6, 2, 3}};
  for (auto ms : matrix) {
    auto got = q_integer_factorization(q_product(ms));
    REQUIRE(got.has_value());
    std::sort(ms.begin(), ms.end());
    CHECK(*got == ms);
  }
}

TEST_CASE("factorization requires constant term 1") {
  CHECK_THROWS_AS(q_integer_factorization(from_ints({2, 1})), invalid_argument_error);
  CHECK_THROWS_AS(q_integer_factorization(QPolynomial::zero()), invalid_argument_error);
}

TEST_CASE("big coefficients survive arithmetic") {
  // [50]_q^4 has central coefficients far beyond 64 bits at larger scales;
  // exercise the BigInt path with a modest but nontrivial case.
  QPolynomial p = q_product({50, 50, 50, 50});
  CHECK(p.eval_at_one() == BigInt(50) * 50 * 50 * 50);
  CHECK(p.palindromic());
}
