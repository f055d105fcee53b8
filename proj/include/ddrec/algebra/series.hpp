#pragma once

#include <vector>

#include "ddrec/algebra/polynomial.hpp"

namespace ddrec {

/// Power series in z truncated after z^order, with coefficients that are
/// polynomials in x. Always holds exactly order + 1 slots.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);
  BivariateSeries(int order, std::vector<ExactPolynomial> coeffs);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^p.
  const ExactPolynomial& operator[](int p) const { return coeffs_.at(p); }
  void set(int p, ExactPolynomial value) { coeffs_.at(p) = std::move(value); }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::vector<ExactPolynomial> coeffs_;
};

BivariateSeries series_add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries series_neg(const BivariateSeries& a);
/// Truncated Cauchy product; the result has order min(a.order(), b.order()).
BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b);
/// d/dz; the result has order a.order() - 1 (order 0 input gives order 0 zero).
BivariateSeries series_derivative(const BivariateSeries& a);
BivariateSeries series_truncate(const BivariateSeries& a, int order);
/// Substitutes x = t in every coefficient.
BivariateSeries series_at_x(const BivariateSeries& a, const Rational& t);

/// exp(g) for g with zero constant term, via (p+1)F_{p+1} = sum (i+1) g_{i+1} F_{p-i}.
/// Throws Error(invalid_argument) when g[0] != 0.
BivariateSeries series_exp(const BivariateSeries& g);

/// n! * [z^n] s, i.e. the n-th term of the sequence an EGF encodes.
ExactPolynomial egf_term(const BivariateSeries& s, int n);

}  // namespace ddrec
