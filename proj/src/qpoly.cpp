#include "ogs/qpoly.hpp"

#include <sstream>

#include "ogs/errors.hpp"

namespace ogs {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPolynomial QPolynomial::one() { return QPolynomial({BigInt(1)}); }

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& QPolynomial::coeff(int k) const {
  static const BigInt zero = 0;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[k];
}

BigInt QPolynomial::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool QPolynomial::palindromic() const {
  for (std::size_t i = 0, j = coeffs_.size(); i < j; ++i)
    if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
  return true;
}

void QPolynomial::add_term(int k, const BigInt& t) {
  if (k < 0) throw invalid_argument_error("negative exponent");
  if (static_cast<int>(coeffs_.size()) <= k) coeffs_.resize(k + 1, 0);
  coeffs_[k] += t;
  trim();
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return QPolynomial(std::move(out));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return QPolynomial();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPolynomial(std::move(out));
}

std::optional<QPolynomial> QPolynomial::divide_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw invalid_argument_error("division by zero polynomial");
  if (is_zero()) return QPolynomial();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<BigInt> rem = coeffs_;
  const auto& d = divisor.coeffs_;
  const BigInt& lead = d.back();
  std::vector<BigInt> quot(rem.size() - d.size() + 1, 0);
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    BigInt c = rem[i + d.size() - 1];
    if (c % lead != 0) return std::nullopt;
    quot[i] = c / lead;
    if (quot[i] == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= quot[i] * d[j];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return QPolynomial(std::move(quot));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << coeffs_[k].str();
    } else {
      if (coeffs_[k] != 1) os << coeffs_[k].str();
      os << 'q';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

QPolynomial q_integer(long long m) {
  if (m < 1) throw invalid_argument_error("q_integer requires m >= 1");
  return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(m), 1));
}

QPolynomial q_product(const std::vector<long long>& ms) {
  QPolynomial out = QPolynomial::one();
  for (long long m : ms) out = out * q_integer(m);
  return out;
}

namespace {

bool factor_dfs(const QPolynomial& poly, long long min_m, std::vector<long long>& acc) {
  if (poly == QPolynomial::one()) return true;
  for (long long m = min_m; m <= poly.degree() + 1; ++m) {
    auto quot = poly.divide_exact(q_integer(m));
    if (!quot) continue;
    acc.push_back(m);
    if (factor_dfs(*quot, m, acc)) return true;
    acc.pop_back();
  }
  return false;
}

} // namespace

std::optional<std::vector<long long>> q_integer_factorization(const QPolynomial& P) {
  if (P.is_zero() || P.coeff(0) != 1)
    throw invalid_argument_error("factorization requires constant term 1");
  std::vector<long long> acc;
  if (!factor_dfs(P, 2, acc)) return std::nullopt;
  return acc;
}

} // namespace ogs
