#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ddrec/algebra/rational.hpp"

namespace ddrec {

/// Dense univariate polynomial in x over exact rationals.
///
/// coeffs()[j] is the coefficient of x^j. The representation is always
/// normalized: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient vector and degree -1.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> coeffs);
  ExactPolynomial(std::initializer_list<Rational> coeffs);

  static ExactPolynomial constant(const Rational& c);
  static ExactPolynomial monomial(const Rational& c, int power);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of x^j; zero outside [0, degree].
  const Rational& operator[](int j) const noexcept;
  const Rational& leading() const noexcept { return (*this)[degree()]; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool has_integer_coeffs() const;

  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

ExactPolynomial poly_add(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial poly_sub(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial poly_mul(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial poly_scale(const ExactPolynomial& a, const Rational& c);
ExactPolynomial poly_derivative(const ExactPolynomial& a);
/// a(x) * x^k, k >= 0.
ExactPolynomial poly_shift(const ExactPolynomial& a, int k);
Rational poly_eval(const ExactPolynomial& a, const Rational& t);
double poly_eval(const ExactPolynomial& a, double t);

/// Human-readable form, highest power first: "x^3 + 3x^2 + x", "-1/2x + 1".
/// The zero polynomial renders as "0". The output is accepted by the
/// polynomial literal parser in speclang.
std::string to_string(const ExactPolynomial& a);

inline ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  return poly_add(a, b);
}
inline ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
  return poly_sub(a, b);
}
inline ExactPolynomial operator-(const ExactPolynomial& a) {
  return poly_scale(a, Rational(-1));
}
inline ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  return poly_mul(a, b);
}
inline ExactPolynomial operator*(const Rational& c, const ExactPolynomial& a) {
  return poly_scale(a, c);
}

}  // namespace ddrec
