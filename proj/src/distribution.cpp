#include "ddrec/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "ddrec/error.hpp"

namespace ddrec {

namespace {

struct Cdf {
  int first = 0;                 // F(first) = 0, first = kmin - 1
  std::vector<double> values;    // F(first + i)
};

Cdf exact_cdf(const PMFTable& t) {
  Cdf cdf;
  const int kmin = t.probs.begin()->first;
  const int kmax = t.probs.rbegin()->first;
  cdf.first = kmin - 1;
  cdf.values.reserve(static_cast<std::size_t>(kmax - kmin + 2));
  Rational acc = 0;
  cdf.values.push_back(0.0);
  for (int k = kmin; k <= kmax; ++k) {
    if (auto it = t.probs.find(k); it != t.probs.end()) acc += it->second;
    cdf.values.push_back(k == kmax ? 1.0 : acc.get_d());
  }
  return cdf;
}

double ks_distance(const Cdf& cdf, double center, double scale, double shift) {
  double worst = 0.0;
  for (std::size_t i = 0; i < cdf.values.size(); ++i) {
    const double k = cdf.first + static_cast<double>(i);
    const double phi = normal_cdf((k + shift - center) / scale);
    worst = std::max(worst, std::fabs(cdf.values[i] - phi));
  }
  return worst;
}

}  // namespace

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

Rational mean_from_derivative(const ExactPolynomial& p) {
  const Rational total = poly_eval(p, Rational(1));
  if (total == 0) throw Error(ErrorKind::zero_mass, "P(1) = 0");
  return poly_eval(poly_derivative(p), Rational(1)) / total;
}

Rational variance_from_derivatives(const ExactPolynomial& p) {
  const Rational total = poly_eval(p, Rational(1));
  if (total == 0) throw Error(ErrorKind::zero_mass, "P(1) = 0");
  const Rational mean = mean_from_derivative(p);
  const Rational second = poly_eval(poly_derivative(poly_derivative(p)), Rational(1)) / total;
  return second + mean - mean * mean;
}

PMFTable pmf(const ExactPolynomial& p, int n) {
  PMFTable t;
  t.n = n;
  // Raw sums S_j = sum k^j p_k, j = 0..4.
  Rational s[5];
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p[k];
    if (c < 0) {
      throw Error(ErrorKind::invalid_distribution,
                  "negative coefficient at x^" + std::to_string(k) + " of P_" +
                      std::to_string(n));
    }
    if (c == 0) continue;
    Rational term = c;
    for (int j = 0; j < 5; ++j) {
      s[j] += term;
      term *= k;
    }
  }
  if (s[0] == 0) {
    throw Error(ErrorKind::zero_mass, "P_" + std::to_string(n) + "(1) = 0, no distribution");
  }
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] != 0) t.probs[k] = p[k] / s[0];
  }
  const Rational& total = s[0];
  t.mean = s[1] / total;
  t.variance = s[2] / total - t.mean * t.mean;

  // Exact central moments, converted to floating point last.
  const Rational& mu = t.mean;
  const Rational e2 = s[2] / total, e3 = s[3] / total, e4 = s[4] / total;
  const Rational mu2 = mu * mu;
  const Rational central3 = e3 - 3 * mu * e2 + 2 * mu2 * mu;
  const Rational central4 = e4 - 4 * mu * e3 + 6 * mu2 * e2 - 3 * mu2 * mu2;
  if (t.variance > 0) {
    const double var = t.variance.get_d();
    t.skewness = central3.get_d() / std::pow(var, 1.5);
    t.excess_kurtosis = central4.get_d() / (var * var) - 3.0;
  }
  return t;
}

NormalityReport normality(const PMFTable& table, int d) {
  if (table.n < 2) {
    throw Error(ErrorKind::invalid_argument,
                "normality needs n >= 2 so that log n > 0, got n = " + std::to_string(table.n));
  }
  if (table.variance <= 0) {
    throw Error(ErrorKind::zero_variance,
                "P_" + std::to_string(table.n) + " is a point mass");
  }
  NormalityReport r;
  r.n = table.n;
  const double mu = table.mean.get_d();
  const double sigma = std::sqrt(table.variance.get_d());
  const Cdf cdf = exact_cdf(table);
  r.ks_plain = ks_distance(cdf, mu, sigma, 0.0);
  r.ks_continuity = ks_distance(cdf, mu, sigma, 0.5);
  r.standardized_third = table.skewness;
  r.standardized_fourth = table.excess_kurtosis + 3.0;

  const double n = table.n;
  const double logn = std::log(n);
  r.normalization.center = d * n / logn;
  r.normalization.scale = d * std::sqrt(n) / logn;
  if (r.normalization.scale > 0) {
    r.theorem_ks_plain = ks_distance(cdf, r.normalization.center, r.normalization.scale, 0.0);
    r.theorem_ks_continuity =
        ks_distance(cdf, r.normalization.center, r.normalization.scale, 0.5);
  } else {
    r.theorem_ks_plain = r.theorem_ks_continuity = 1.0;
  }
  return r;
}

MeanIdentityReport mean_identity_check(const FamilyDescriptor& family, int max_n) {
  const RecurrenceSpec& spec = family.spec;
  const bool shape = spec.lags.empty() && spec.start_index == 0 &&
                     spec.start_poly == ExactPolynomial{1} && spec.gamma.degree() == 1 &&
                     spec.gamma[1] == 1;
  if (!shape) {
    throw Error(ErrorKind::unsupported_shape,
                "mean identity needs T_n = (x + c) T_{n-1} + m x T'_{n-1}, T_0 = 1");
  }
  const Rational c = spec.gamma[0];
  const Rational& m = spec.m;
  const auto polys = generate(spec, max_n + 1);
  MeanIdentityReport report;
  for (int n = 0; n <= max_n; ++n) {
    const Rational tn = poly_eval(polys[n], Rational(1));
    const Rational tn1 = poly_eval(polys[n + 1], Rational(1));
    const Rational wang = tn1 / (m * tn) - (1 + c) / m;
    if (pmf(polys[n], n).mean != wang) {
      report.ok = false;
      report.first_mismatch = n;
      break;
    }
    report.checked_up_to = n;
  }
  return report;
}

std::vector<NormalityReport> clt_scan(const FamilyDescriptor& family, std::span<const int> ns) {
  for (int n : ns) {
    if (n < 2) {
      throw Error(ErrorKind::invalid_argument,
                  "clt scan needs n >= 2 (log n must be positive), got " + std::to_string(n));
    }
    if (n < family.spec.start_index) {
      throw Error(ErrorKind::invalid_index,
                  "n = " + std::to_string(n) + " precedes the first row of " +
                      family.display_name());
    }
  }
  std::vector<NormalityReport> out(ns.size());
  if (ns.empty()) return out;
  const int d = theorem_constants(family.saddle).d;
  const int top = *std::max_element(ns.begin(), ns.end());
  const auto polys = generate(family.spec, top);
  const int base = family.spec.start_index;

  std::exception_ptr failure;
  const int count = static_cast<int>(ns.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      const int n = ns[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] =
          normality(pmf(polys[static_cast<std::size_t>(n - base)], n), d);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ddrec
