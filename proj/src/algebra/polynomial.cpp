#include "ddrec/algebra/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace ddrec {

namespace {
const Rational kZero{0};
}  // namespace

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

ExactPolynomial::ExactPolynomial(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs) {
  normalize();
}

ExactPolynomial ExactPolynomial::constant(const Rational& c) {
  return ExactPolynomial(std::vector<Rational>{c});
}

ExactPolynomial ExactPolynomial::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return ExactPolynomial(std::move(v));
}

const Rational& ExactPolynomial::operator[](int j) const noexcept {
  if (j < 0 || j > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(j)];
}

bool ExactPolynomial::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& q) { return is_integer(q); });
}

void ExactPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactPolynomial poly_add(const ExactPolynomial& a, const ExactPolynomial& b) {
  const int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[j] = a[j] + b[j];
  return ExactPolynomial(std::move(out));
}

ExactPolynomial poly_sub(const ExactPolynomial& a, const ExactPolynomial& b) {
  const int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[j] = a[j] - b[j];
  return ExactPolynomial(std::move(out));
}

ExactPolynomial poly_mul(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  Rational t;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      t = a[i] * b[j];
      out[i + j] += t;
    }
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial poly_scale(const ExactPolynomial& a, const Rational& c) {
  if (c == 0) return {};
  std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& q : out) q *= c;
  return ExactPolynomial(std::move(out));
}

ExactPolynomial poly_derivative(const ExactPolynomial& a) {
  if (a.degree() < 1) return {};
  std::vector<Rational> out(static_cast<std::size_t>(a.degree()));
  for (int j = 1; j <= a.degree(); ++j) out[j - 1] = a[j] * j;
  return ExactPolynomial(std::move(out));
}

ExactPolynomial poly_shift(const ExactPolynomial& a, int k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<Rational> out(static_cast<std::size_t>(k));
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return ExactPolynomial(std::move(out));
}

Rational poly_eval(const ExactPolynomial& a, const Rational& t) {
  Rational acc = 0;
  for (int j = a.degree(); j >= 0; --j) acc = acc * t + a[j];
  return acc;
}

double poly_eval(const ExactPolynomial& a, double t) {
  double acc = 0.0;
  for (int j = a.degree(); j >= 0; --j) acc = acc * t + a[j].get_d();
  return acc;
}

std::string to_string(const ExactPolynomial& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int j = a.degree(); j >= 0; --j) {
    const Rational& c = a[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (j == 0 || mag != 1) out += mag.get_str();
    if (j >= 1) out += "x";
    if (j >= 2) out += "^" + std::to_string(j);
  }
  return out;
}

}  // namespace ddrec
