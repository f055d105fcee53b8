#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ddrec/algebra/polynomial.hpp"
#include "ddrec/families.hpp"

namespace ddrec {

/// Exact law of X_n with P(X_n = k) = p_{n,k} / P_n(1).
struct PMFTable {
  int n = 0;
  /// Only k with nonzero mass.
  std::map<int, Rational> probs;
  Rational mean;
  Rational variance;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
};

/// Throws Error(invalid_distribution) on a negative coefficient and
/// Error(zero_mass) when P_n(1) = 0.
PMFTable pmf(const ExactPolynomial& p, int n);

/// P'(1) / P(1).
Rational mean_from_derivative(const ExactPolynomial& p);
/// P''(1) / P(1) + mean - mean^2.
Rational variance_from_derivatives(const ExactPolynomial& p);

/// Standard normal CDF.
double normal_cdf(double t);

struct Normalization {
  double center = 0.0;  // d n / log n
  double scale = 0.0;   // d sqrt(n) / log n
};

struct NormalityReport {
  int n = 0;
  /// sup_k |F(k) - Phi((k - mu) / sigma)| with the exact mean and deviation.
  double ks_plain = 0.0;
  /// Same with the continuity correction (k + 1/2 - mu) / sigma.
  double ks_continuity = 0.0;
  double standardized_third = 0.0;
  /// mu_4 / sigma^4 (3 for the normal law).
  double standardized_fourth = 0.0;
  Normalization normalization;
  /// The two statistics under the limit-theorem centering and scaling.
  double theorem_ks_plain = 0.0;
  double theorem_ks_continuity = 0.0;
};

/// Throws Error(invalid_argument) for n < 2 and Error(zero_variance) for a
/// degenerate law.
NormalityReport normality(const PMFTable& table, int d);

struct MeanIdentityReport {
  bool ok = true;
  int checked_up_to = -1;
  std::optional<int> first_mismatch;
};

/// For families with gamma = x + c and no lags, checks
/// E X_n = T_{n+1}(1) / (m T_n(1)) - (1 + c) / m exactly for n = 0..N.
/// Throws Error(unsupported_shape) otherwise.
MeanIdentityReport mean_identity_check(const FamilyDescriptor& family, int max_n);

/// One NormalityReport per n (the spec's row index), computed from exact
/// PMFs. Reports for different n are computed concurrently.
std::vector<NormalityReport> clt_scan(const FamilyDescriptor& family, std::span<const int> ns);

}  // namespace ddrec
