#include <doctest.h>

#include <cmath>
#include <random>

#include "ddrec/asymptotics.hpp"
#include "ddrec/error.hpp"

using namespace ddrec;

namespace {

// Root of z e^z = n by plain bisection.
double bisect_lambert(double n) {
  double lo = 0, hi = std::log(n) + 2;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(mid) < n ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Bell numbers B_0..B_n from the Bell triangle.
std::vector<Integer> bell_numbers(int n) {
  std::vector<Integer> out{1};
  std::vector<Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    out.push_back(next.front());
    row = std::move(next);
  }
  return out;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("f_partials examples") {
  const auto st = catalog("stirling2").saddle;
  auto p = f_partials(st, 0.0, 1.0);
  CHECK(p.f == doctest::Approx(0.0));
  CHECK(p.f_z == doctest::Approx(1.0));
  CHECK(p.f_zz == doctest::Approx(1.0));
  CHECK(p.f_x == doctest::Approx(0.0));
  CHECK(p.f_zx == doctest::Approx(1.0));
  CHECK(p.f_xx == doctest::Approx(0.0));

  p = f_partials(st, 1.0, 1.0);
  CHECK(p.f == doctest::Approx(std::exp(1.0) - 1));
  CHECK(p.f_z == doctest::Approx(std::exp(1.0)));
  CHECK(p.f_x == doctest::Approx(std::exp(1.0) - 1));

  p = f_partials(catalog("assoc_stirling", {{"s", 2}}).saddle, 0.0, 1.0);
  CHECK(p.f == doctest::Approx(0.0));
  CHECK(p.f_z == doctest::Approx(0.0));
  CHECK(p.f_x == doctest::Approx(0.0));
  CHECK(p.f_zz == doctest::Approx(1.0));
}

TEST_CASE("property: partials match central finite differences") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> zd(0.1, 5.0), xd(0.5, 2.0);
  RecurrenceSpec quad;
  quad.gamma = ExactPolynomial{1, 2, 3};
  quad.m = 2;
  quad.lags = {LagTerm{2, ExactPolynomial{Rational(1, 2), 1, 5}, true}};
  auto families = default_catalog();
  FamilyDescriptor extra;
  extra.saddle = build_exponent(quad);
  families.push_back(extra);
  for (const auto& fam : families) {
    const auto& f = fam.saddle;
    for (int trial = 0; trial < 10; ++trial) {
      const double z = zd(rng), x = xd(rng), h = 1e-4;
      const auto p = f_partials(f, z, x);
      auto F = [&](double zz, double xx) { return f_partials(f, zz, xx).f; };
      auto Fz = [&](double zz, double xx) { return f_partials(f, zz, xx).f_z; };
      auto Fx = [&](double zz, double xx) { return f_partials(f, zz, xx).f_x; };
      const double tol = 1e-6;
      auto near = [&](double got, double want) {
        return std::fabs(got - want) <= tol * std::max(1.0, std::fabs(want));
      };
      CHECK(near(p.f_z, (F(z + h, x) - F(z - h, x)) / (2 * h)));
      CHECK(near(p.f_x, (F(z, x + h) - F(z, x - h)) / (2 * h)));
      CHECK(near(p.f_zz, (Fz(z + h, x) - Fz(z - h, x)) / (2 * h)));
      CHECK(near(p.f_zx, (Fz(z, x + h) - Fz(z, x - h)) / (2 * h)));
      CHECK(near(p.f_xx, (Fx(z, x + h) - Fx(z, x - h)) / (2 * h)));
    }
  }
}

TEST_CASE("large m z uses the rescaled sums") {
  const auto st = catalog("stirling2").saddle;
  const double z = 350.0;  // past the rescaling switch, e^z still finite
  const auto p = f_partials(st, z, 1.0);
  CHECK(rel(p.f_z, std::exp(z)) <= 1e-12);
  CHECK(rel(p.f_zz, std::exp(z)) <= 1e-12);
  CHECK(rel(p.f_x, std::exp(z) - 1) <= 1e-12);
  CHECK(p.f_xx == doctest::Approx(0.0));

  SaddleFunction f;
  f.m = 3;
  f.q2 = ExactPolynomial{0, 1, 2};
  f.q1 = {ExactPolynomial{0, -1, -2}};
  const auto big = f_partials(f, 110.0, 1.0);  // m z = 330, dominant 2 e^{660}
  CHECK(std::isfinite(big.f_zz));
  CHECK(big.f_z / big.f_zz == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
}

TEST_CASE("solve_saddle") {
  const auto st = catalog("stirling2").saddle;
  CHECK(solve_saddle(st, 1) == doctest::Approx(0.5671432904097838).epsilon(1e-12));
  CHECK(std::fabs(solve_saddle(st, 100) - bisect_lambert(100)) <= 1e-9);
  CHECK(solve_saddle(st, 100) == doctest::Approx(3.3859).epsilon(1e-4));
  for (int n : {100, 1000, 10000}) {
    const double rho = solve_saddle(st, n);
    CHECK(std::fabs(rho - std::log(n)) <= 2 * std::log(std::log(n)) + 3);
  }
  for (const auto& fam : default_catalog()) {
    CAPTURE(fam.display_name());
    for (int n : {10, 100, 1000, 10000}) {
      const double rho = solve_saddle(fam.saddle, n);
      const auto p = f_partials(fam.saddle, rho, 1.0);
      CHECK(std::fabs(rho * p.f_z - n) <= 1e-9 * n);
      CHECK(rho * p.f_z + rho * rho * p.f_zz > 0);
    }
  }
  SaddleFunction flat;
  flat.q1 = {ExactPolynomial{}, ExactPolynomial{3}};
  try {
    solve_saddle(flat, 10);
    FAIL("expected saddle_failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::saddle_failure);
  }
}

TEST_CASE("saddle_report") {
  const auto st = catalog("stirling2").saddle;
  const auto r = saddle_report(st, 100);
  CHECK(r.predicted_mean == doctest::Approx(std::exp(r.rho) - 1));
  CHECK(r.predicted_mean == doctest::Approx(28.54).epsilon(1e-3));
  CHECK(r.leading_mean == doctest::Approx(100 / std::log(100.0)));
  CHECK(r.leading_mean == doctest::Approx(21.71).epsilon(1e-3));
  for (int n = 50; n <= 500; n += 25) {
    const auto s = saddle_report(st, n);
    CHECK(s.predicted_variance > 0);
    CHECK(s.predicted_variance < s.predicted_mean);
  }
  CHECK_THROWS_AS(saddle_report(st, 2), Error);
}

TEST_CASE("rho' matches the finite-difference slope") {
  for (const auto& fam : {catalog("stirling2"), catalog("dowling", {{"m", 2}})}) {
    for (int n : {50, 200}) {
      const double h = 1e-4;
      const double fd = (solve_saddle(fam.saddle, n, 1 + h) - solve_saddle(fam.saddle, n, 1 - h)) / (2 * h);
      CHECK(rel(saddle_report(fam.saddle, n).rho_prime, fd) <= 1e-3);
    }
  }
}

TEST_CASE("asymptotic order of the partials at n = 10^4") {
  const auto st = catalog("stirling2").saddle;
  const double rho = solve_saddle(st, 10000);
  const auto p = f_partials(st, rho, 1.0);
  const double e = std::exp(rho);  // m = d = alpha_d = 1
  for (double ratio : {p.f_z / e, p.f_x / e, p.f_zz / e, p.f_zx / e}) {
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.1);
  }
}

TEST_CASE("compare_exact against Bell numbers") {
  const auto bell = bell_numbers(1001);
  const auto fam = catalog("stirling2");
  const auto c20 = compare_exact(fam, 20);
  const auto c100 = compare_exact(fam, 100);
  const double exact_mean = Rational(Rational(bell[101]) / Rational(bell[100]) - 1).get_d();
  CHECK(c100.exact_mean == doctest::Approx(exact_mean).epsilon(1e-12));
  CHECK(c100.log_exact_total == doctest::Approx(log_abs(bell[100])).epsilon(1e-12));
  CHECK(c100.mean_rel_error < c20.mean_rel_error);

  // Hayman estimate of B_100 within a few percent, and closer than at n = 20.
  const double est100 = c100.saddle.coeff_estimate_log + std::lgamma(101.0);
  const double est20 = c20.saddle.coeff_estimate_log + std::lgamma(21.0);
  const double ratio100 = std::exp(est100 - log_abs(bell[100]));
  const double ratio20 = std::exp(est20 - log_abs(bell[20]));
  CHECK(std::fabs(ratio100 - 1) < 0.05);
  CHECK(std::fabs(ratio100 - 1) < std::fabs(ratio20 - 1));
  CHECK(c100.coeff_log_rel_error < c20.coeff_log_rel_error);

  // exact mean * log n / n: inside (0.5, 2) and net drift toward 1. The ratio
  // peaks near n = 200, so only the endpoint comparison is asserted.
  std::vector<double> ratios;
  for (int n : {100, 300, 1000}) {
    const double mean = Rational(Rational(bell[n + 1]) / Rational(bell[n]) - 1).get_d();
    ratios.push_back(mean * std::log(n) / n);
    CHECK(ratios.back() > 0.5);
    CHECK(ratios.back() < 2.0);
  }
  CHECK(std::fabs(ratios[2] - 1) < std::fabs(ratios[0] - 1));
  CHECK(std::fabs(ratios[2] - 1) < std::fabs(ratios[1] - 1));

  const int ns[] = {20, 100};
  const auto scan = compare_exact_scan(fam, ns);
  CHECK(scan[0].exact_mean == c20.exact_mean);
  CHECK(scan[1].saddle.rho == c100.saddle.rho);
}

TEST_CASE("compare_exact strips the x^r prefactor") {
  const auto rs = catalog("r_stirling", {{"r", 2}});
  const auto c = compare_exact(rs, 60);
  // The law of the non-distinguished block count sits near the saddle prediction.
  CHECK(c.mean_rel_error < 0.05);
  CHECK(c.variance_rel_error < 0.2);
}
