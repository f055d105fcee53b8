#include "ddrec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>

#include "ddrec/distribution.hpp"
#include "ddrec/error.hpp"

namespace ddrec {

namespace {

constexpr double kLogScaleThreshold = 300.0;

struct Q1Values {
  double v = 0, z = 0, zz = 0, x = 0, zx = 0, xx = 0;
};

// q1 and its partials at (z, x).
Q1Values eval_q1(const SaddleFunction& f, double z, double x) {
  Q1Values out;
  double zp = 1.0;       // z^p
  double zp1 = 0.0;      // p z^{p-1}
  double zp2 = 0.0;      // p (p-1) z^{p-2}
  double zprev = 0.0, zprev2 = 0.0;  // z^{p-1}, z^{p-2}
  for (int p = 0; p < static_cast<int>(f.q1.size()); ++p) {
    if (p >= 1) {
      zprev2 = zprev;
      zprev = zp;
      zp *= z;
      zp1 = p * zprev;
      zp2 = p >= 2 ? p * (p - 1) * zprev2 : 0.0;
    }
    const ExactPolynomial& poly = f.q1[static_cast<std::size_t>(p)];
    double v = 0, dv = 0, ddv = 0;
    for (int j = poly.degree(); j >= 0; --j) {
      ddv = ddv * x + 2 * dv;
      dv = dv * x + v;
      v = v * x + poly[j].get_d();
    }
    out.v += v * zp;
    out.z += v * zp1;
    out.zz += v * zp2;
    out.x += dv * zp;
    out.zx += dv * zp1;
    out.xx += ddv * zp;
  }
  return out;
}

// sum_j j^i a_j u^j for i = 0, 1, 2, as scale * (s0, s1, s2) with
// log_scale = log(scale).
struct Q2Sums {
  double log_scale = 0.0;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
};

Q2Sums eval_q2(const SaddleFunction& f, double z, double x) {
  Q2Sums out;
  const double m = f.m.get_d();
  const double lu = std::log(x) + m * z;
  if (m * z > kLogScaleThreshold) {
    double top = -std::numeric_limits<double>::infinity();
    for (int j = 0; j <= f.q2.degree(); ++j) {
      if (f.q2[j] != 0) top = std::max(top, j * lu);
    }
    out.log_scale = top;
  }
  for (int j = 0; j <= f.q2.degree(); ++j) {
    if (f.q2[j] == 0) continue;
    const double term = f.q2[j].get_d() * std::exp(j * lu - out.log_scale);
    out.s0 += term;
    out.s1 += j * term;
    out.s2 += static_cast<double>(j) * j * term;
  }
  return out;
}

double rescale(double s, double log_scale) {
  return log_scale == 0.0 ? s : s * std::exp(log_scale);
}

// Sign-reliable z f_z(z, x) - n for the bracket search. In the log-scaled
// regime only the comparison with n matters, so the result is +-1.
double bracket_residual(const SaddleFunction& f, double z, double x, int n) {
  const double m = f.m.get_d();
  if (m * z <= kLogScaleThreshold) return z * f_partials(f, z, x).f_z - n;
  const Q1Values q1 = eval_q1(f, z, x);
  const Q2Sums q2 = eval_q2(f, z, x);
  const double scaled = m * q2.s1 + q1.z * std::exp(-q2.log_scale);
  if (scaled <= 0) return -1.0;
  const double log_zfz = std::log(z) + q2.log_scale + std::log(scaled);
  return log_zfz > std::log(static_cast<double>(n)) ? 1.0 : -1.0;
}

}  // namespace

Partials f_partials(const SaddleFunction& f, double z, double x) {
  if (!(x > 0) || !std::isfinite(z)) {
    throw Error(ErrorKind::invalid_argument, "f_partials needs finite z and x > 0");
  }
  const double m = f.m.get_d();
  const Q1Values q1 = eval_q1(f, z, x);
  const Q2Sums q2 = eval_q2(f, z, x);
  const double s0 = rescale(q2.s0, q2.log_scale);
  const double s1 = rescale(q2.s1, q2.log_scale);
  const double s2 = rescale(q2.s2, q2.log_scale);
  Partials p;
  p.f = q1.v + s0;
  p.f_z = q1.z + m * s1;
  p.f_x = q1.x + s1 / x;
  p.f_zz = q1.zz + m * m * s2;
  p.f_zx = q1.zx + m * s2 / x;
  p.f_xx = q1.xx + (s2 - s1) / (x * x);
  return p;
}

double solve_saddle(const SaddleFunction& f, int n, double x) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "saddle point needs n >= 1");
  const TheoremConstants tc = theorem_constants(f);
  if (!tc.hypothesis_ok) {
    throw Error(ErrorKind::saddle_failure,
                "saddle equation not solvable: need d >= 1, alpha_d > 0, m > 0 (d = " +
                    std::to_string(tc.d) + ", alpha_d = " + tc.alpha_d.get_str() + ")");
  }
  const double m = f.m.get_d();
  const double target = n;
  double lo = 1e-12;
  if (bracket_residual(f, lo, x, n) >= 0) {
    throw Error(ErrorKind::saddle_failure, "z f_z already exceeds n near z = 0");
  }
  double hi = 2.0 * std::log(target) / (m * tc.d) + 4.0;
  int grow = 0;
  while (bracket_residual(f, hi, x, n) <= 0) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 60) throw Error(ErrorKind::saddle_failure, "could not bracket the saddle point");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (bracket_residual(f, mid, x, n) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  double rho = 0.5 * (lo + hi);
  const double tol = std::max(1e-9 * target, 1e-12);
  for (int it = 0; it < 50; ++it) {
    const Partials p = f_partials(f, rho, x);
    const double g = rho * p.f_z - target;
    if (std::fabs(g) <= 0.01 * tol) break;
    const double slope = p.f_z + rho * p.f_zz;
    if (!(slope > 0)) break;
    const double next = rho - g / slope;
    if (!(next > 0) || next == rho) break;
    rho = next;
  }
  const double residual = rho * f_partials(f, rho, x).f_z - target;
  if (!(std::fabs(residual) <= tol)) {
    throw Error(ErrorKind::saddle_failure,
                "saddle solve did not converge (residual " + std::to_string(residual) + ")");
  }
  return rho;
}

SaddleReport saddle_report(const SaddleFunction& f, int n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "saddle report needs n >= 3");
  const TheoremConstants tc = theorem_constants(f);
  SaddleReport r;
  r.n = n;
  r.rho = solve_saddle(f, n, 1.0);
  const Partials p = f_partials(f, r.rho, 1.0);
  r.residual = r.rho * p.f_z - n;
  r.b_value = r.rho * p.f_z + r.rho * r.rho * p.f_zz;
  if (!(r.b_value > 0)) {
    throw Error(ErrorKind::saddle_failure,
                "b(rho, 1) <= 0 at the saddle point; input is not admissible");
  }
  r.rho_prime = -r.rho * p.f_zx / (p.f_z + r.rho * p.f_zz);
  r.predicted_mean = p.f_x;
  r.predicted_variance = p.f_x + r.rho_prime * p.f_zx + p.f_xx;
  r.coeff_estimate_log =
      -n * std::log(r.rho) + p.f - 0.5 * std::log(2.0 * std::numbers::pi * r.b_value);
  const double logn = std::log(static_cast<double>(n));
  r.leading_mean = tc.d * n / logn;
  r.leading_variance = static_cast<double>(tc.d) * tc.d * n / (logn * logn);
  return r;
}

ExactComparison compare_exact(const SaddleFunction& f, const ExactPolynomial& p, int n) {
  ExactComparison c;
  c.saddle = saddle_report(f, n);
  const Rational total = poly_eval(p, Rational(1));
  if (total <= 0) throw Error(ErrorKind::zero_mass, "P_n(1) must be positive");
  c.exact_mean = mean_from_derivative(p).get_d();
  c.exact_variance = variance_from_derivatives(p).get_d();
  c.log_exact_total = log_abs(total);
  c.mean_rel_error = std::fabs(c.exact_mean - c.saddle.predicted_mean) / c.exact_mean;
  c.variance_rel_error =
      std::fabs(c.exact_variance - c.saddle.predicted_variance) / c.exact_variance;
  const double estimate = c.saddle.coeff_estimate_log + std::lgamma(n + 1.0);
  c.coeff_log_rel_error = std::fabs(estimate - c.log_exact_total) / std::fabs(c.log_exact_total);
  return c;
}

namespace {

ExactPolynomial strip_offset(const ExactPolynomial& p, int offset) {
  if (offset == 0) return p;
  std::vector<Rational> coeffs;
  for (int k = offset; k <= p.degree(); ++k) coeffs.push_back(p[k]);
  return ExactPolynomial(std::move(coeffs));
}

}  // namespace

ExactComparison compare_exact(const FamilyDescriptor& family, int n) {
  const int ns[] = {n};
  return compare_exact_scan(family, ns).front();
}

std::vector<ExactComparison> compare_exact_scan(const FamilyDescriptor& family,
                                                std::span<const int> ns) {
  std::vector<ExactComparison> out(ns.size());
  if (ns.empty()) return out;
  for (int n : ns) {
    if (n < 3) throw Error(ErrorKind::invalid_argument, "asymptotic comparison needs n >= 3");
  }
  const int top = *std::max_element(ns.begin(), ns.end());
  const auto polys = generate(family.spec, family.offset + top);
  const int base = family.spec.start_index;

  std::exception_ptr failure;
  const int count = static_cast<int>(ns.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      const int n = ns[static_cast<std::size_t>(i)];
      const auto& p = polys[static_cast<std::size_t>(family.offset + n - base)];
      out[static_cast<std::size_t>(i)] =
          compare_exact(family.saddle, strip_offset(p, family.offset), n);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ddrec
