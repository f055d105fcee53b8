#pragma once

#include <span>
#include <vector>

#include "ddrec/families.hpp"

namespace ddrec {

/// f and its first and second partial derivatives at (z, x).
struct Partials {
  double f = 0.0;
  double f_z = 0.0;
  double f_zz = 0.0;
  double f_x = 0.0;
  double f_zx = 0.0;
  double f_xx = 0.0;
};

/// Closed-form partials of f = q1(z,x) + q2(u), u = x e^{mz}. With
/// S1 = u q2'(u) and S2 = u (u q2'(u))':
///   f_z  = q1_z  + m S1          f_x  = q1_x  + S1 / x
///   f_zz = q1_zz + m^2 S2        f_zx = q1_zx + m S2 / x
///   f_xx = q1_xx + (S2 - S1) / x^2
/// Once m z exceeds 300 the q2 sums are accumulated relative to their largest
/// exponential and rescaled at the end. Requires x > 0.
Partials f_partials(const SaddleFunction& f, double z, double x);

/// Positive root of z f_z(z, x) = n, with
/// |rho f_z(rho, x) - n| <= max(1e-9 n, 1e-12). Bisection on a doubling
/// bracket, then Newton. Throws Error(saddle_failure) when the family fails
/// the limit-theorem hypothesis or no bracket is found.
double solve_saddle(const SaddleFunction& f, int n, double x = 1.0);

struct SaddleReport {
  int n = 0;
  double rho = 0.0;
  /// d rho / dx at x = 1 by implicit differentiation.
  double rho_prime = 0.0;
  /// h_n'(1) = f_x(rho, 1).
  double predicted_mean = 0.0;
  /// h_n'(1) + h_n''(1) = f_x + rho' f_zx + f_xx.
  double predicted_variance = 0.0;
  /// b(rho, 1) = rho f_z + rho^2 f_zz.
  double b_value = 0.0;
  /// log(rho^{-n} e^{f(rho,1)} / sqrt(2 pi b)), the saddle estimate of log [z^n] e^f.
  double coeff_estimate_log = 0.0;
  double leading_mean = 0.0;      // d n / log n
  double leading_variance = 0.0;  // d^2 n / log^2 n
  double residual = 0.0;          // rho f_z(rho, 1) - n
};

/// Requires n >= 3.
SaddleReport saddle_report(const SaddleFunction& f, int n);

struct ExactComparison {
  SaddleReport saddle;
  double exact_mean = 0.0;
  double exact_variance = 0.0;
  /// log P_n(1), compared against coeff_estimate_log + log n!.
  double log_exact_total = 0.0;
  double mean_rel_error = 0.0;
  double variance_rel_error = 0.0;
  /// |coeff_estimate_log + log n! - log P_n(1)| / |log P_n(1)|.
  double coeff_log_rel_error = 0.0;
};

/// `p` is the polynomial whose law the saddle function describes, i.e.
/// n! [z^n] e^f with any x^offset prefactor already divided out.
ExactComparison compare_exact(const SaddleFunction& f, const ExactPolynomial& p, int n);

/// Uses P_{offset+n} of the family's recurrence, stripping the x^offset factor.
ExactComparison compare_exact(const FamilyDescriptor& family, int n);

/// compare_exact over several n; the rows are generated once and the saddle
/// work runs concurrently.
std::vector<ExactComparison> compare_exact_scan(const FamilyDescriptor& family,
                                                std::span<const int> ns);

}  // namespace ddrec
