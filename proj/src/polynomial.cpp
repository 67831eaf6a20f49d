#include "wap/polynomial.hpp"

#include <algorithm>

#include "wap/error.hpp"

namespace wap {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::monomial(const BigInt& coefficient, std::size_t degree) {
  std::vector<BigInt> c(degree + 1, 0);
  c[degree] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
  require(!coeffs_.empty(), ErrorCode::InvalidArgument, "the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

long IntPolynomial::valuation() const noexcept {
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    if (coeffs_[d] != 0) return static_cast<long>(d);
  return -1;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t d = 1; d < coeffs_.size(); ++d) c[d - 1] = coeffs_[d] * static_cast<unsigned long>(d);
  return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(k, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_json() const {
  std::string out = "[";
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (d) out += ",";
    out += "\"" + to_decimal(coeffs_[d]) + "\"";
  }
  return out + "]";
}

std::string IntPolynomial::to_human() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = magnitude == 1;
    if (k == 0) {
      out += to_decimal(magnitude);
    } else {
      if (!unit) out += to_decimal(magnitude) + "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPolynomial exact_divide(const IntPolynomial& a, const BigInt& b) {
  require(b != 0, ErrorCode::InvalidArgument, "division by zero");
  std::vector<BigInt> c = a.coeffs();
  for (auto& v : c) {
    require(mpz_divisible_p(v.get_mpz_t(), b.get_mpz_t()) != 0, ErrorCode::InternalConsistency,
            "inexact division of a polynomial by " + to_decimal(b));
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), b.get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  require(!b.is_zero(), ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return {};
  require(a.degree() >= b.degree(), ErrorCode::InternalConsistency, "inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> q(rem.size() - db, 0);
  const BigInt& lead = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    require(mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) != 0, ErrorCode::InternalConsistency,
            "inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) mpz_submul(rem[k + i].get_mpz_t(), q[k].get_mpz_t(), b.coeffs()[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < db && i < rem.size(); ++i)
    require(rem[i] == 0, ErrorCode::InternalConsistency, "inexact polynomial division");
  return IntPolynomial(std::move(q));
}

}  // namespace wap
