#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ogs {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in q with big-integer coefficients, kept in canonical form
// (no trailing zeros; the zero polynomial has an empty coefficient vector).
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial one();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval_at_one() const;
  bool palindromic() const;

  // Adds t * q^k in place.
  void add_term(int k, const BigInt& t = 1);

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;
  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  // Quotient if divisor divides exactly over the integers, nullopt otherwise.
  std::optional<QPolynomial> divide_exact(const QPolynomial& divisor) const;

  // "1 + 2q + 2q^2 + q^3"
  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// [m]_q = 1 + q + ... + q^(m-1), m >= 1.
QPolynomial q_integer(long long m);
QPolynomial q_product(const std::vector<long long>& ms);

// Factors P into q-integers [m]_q, m >= 2, by smallest-first depth-first
// search with backtracking; returns the multiset sorted ascending, or nullopt
// if P is not a product of q-integers. Requires constant term 1.
std::optional<std::vector<long long>> q_integer_factorization(const QPolynomial& P);

} // namespace ogs
