#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wap/bigint.hpp"

namespace wap {

/// Dense univariate polynomial over the integers; coeffs()[d] multiplies x^d.
/// The top coefficient is never zero; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(const BigInt& coefficient, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^d; zero past the degree.
  BigInt coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : BigInt(0); }
  const BigInt& leading() const;

  /// Lowest degree with a nonzero coefficient; -1 for zero.
  long valuation() const noexcept;

  IntPolynomial derivative() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;

  /// Multiplies by x^k.
  IntPolynomial shifted_up(std::size_t k) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// JSON array of decimal coefficient strings, constant term first.
  std::string to_json() const;
  /// Human form such as "x^3 - 3*x".
  std::string to_human() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// a / b where b divides a in Z[x]; throws InternalConsistency otherwise.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial exact_divide(const IntPolynomial& a, const BigInt& b);

}  // namespace wap
