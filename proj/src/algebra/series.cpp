#include "ddrec/algebra/series.hpp"

#include <algorithm>

#include "ddrec/error.hpp"

namespace ddrec {

BivariateSeries::BivariateSeries(int order) {
  if (order < 0) throw Error(ErrorKind::invalid_argument, "series order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

BivariateSeries::BivariateSeries(int order, std::vector<ExactPolynomial> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw Error(ErrorKind::invalid_argument,
                "series of order N needs exactly N+1 coefficients");
  }
}

BivariateSeries series_add(const BivariateSeries& a, const BivariateSeries& b) {
  const int n = std::min(a.order(), b.order());
  BivariateSeries out(n);
  for (int p = 0; p <= n; ++p) out.set(p, a[p] + b[p]);
  return out;
}

BivariateSeries series_neg(const BivariateSeries& a) {
  BivariateSeries out(a.order());
  for (int p = 0; p <= a.order(); ++p) out.set(p, -a[p]);
  return out;
}

BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) {
  const int n = std::min(a.order(), b.order());
  BivariateSeries out(n);
  for (int p = 0; p <= n; ++p) {
    ExactPolynomial acc;
    for (int i = 0; i <= p; ++i) {
      if (a[i].is_zero() || b[p - i].is_zero()) continue;
      acc = acc + a[i] * b[p - i];
    }
    out.set(p, std::move(acc));
  }
  return out;
}

BivariateSeries series_derivative(const BivariateSeries& a) {
  if (a.order() == 0) return BivariateSeries(0);
  BivariateSeries out(a.order() - 1);
  for (int p = 1; p <= a.order(); ++p) out.set(p - 1, poly_scale(a[p], Rational(p)));
  return out;
}

BivariateSeries series_truncate(const BivariateSeries& a, int order) {
  if (order > a.order()) {
    throw Error(ErrorKind::invalid_argument, "cannot truncate a series to a higher order");
  }
  BivariateSeries out(order);
  for (int p = 0; p <= order; ++p) out.set(p, a[p]);
  return out;
}

BivariateSeries series_at_x(const BivariateSeries& a, const Rational& t) {
  BivariateSeries out(a.order());
  for (int p = 0; p <= a.order(); ++p) {
    out.set(p, ExactPolynomial::constant(poly_eval(a[p], t)));
  }
  return out;
}

BivariateSeries series_exp(const BivariateSeries& g) {
  if (!g[0].is_zero()) {
    throw Error(ErrorKind::invalid_argument,
                "series_exp needs a zero constant term, got " + to_string(g[0]));
  }
  const int n = g.order();
  // dg[i] = (i+1) g_{i+1}
  std::vector<ExactPolynomial> dg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) dg[i] = poly_scale(g[i + 1], Rational(i + 1));

  BivariateSeries out(n);
  out.set(0, ExactPolynomial::constant(1));
  for (int p = 0; p < n; ++p) {
    ExactPolynomial acc;
    for (int i = 0; i <= p; ++i) {
      if (dg[i].is_zero()) continue;
      acc = acc + dg[i] * out[p - i];
    }
    out.set(p + 1, poly_scale(acc, Rational(1, p + 1)));
  }
  return out;
}

ExactPolynomial egf_term(const BivariateSeries& s, int n) {
  return poly_scale(s[n], Rational(factorial(static_cast<unsigned long>(n))));
}

}  // namespace ddrec
