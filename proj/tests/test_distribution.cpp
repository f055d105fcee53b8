#include <doctest.h>

#include <cmath>

#include "ddrec/distribution.hpp"
#include "ddrec/error.hpp"

using namespace ddrec;

namespace {

Rational total(const PMFTable& t) {
  Rational s = 0;
  for (const auto& [k, p] : t.probs) s += p;
  return s;
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::io_error;
}

}  // namespace

TEST_CASE("pmf examples") {
  const auto t = pmf(ExactPolynomial{0, 1, 3, 1}, 3);
  CHECK(t.probs == std::map<int, Rational>{{1, Rational(1, 5)}, {2, Rational(3, 5)}, {3, Rational(1, 5)}});
  CHECK(t.mean == 2);
  CHECK(t.variance == Rational(2, 5));
  CHECK(t.skewness == doctest::Approx(0.0));
  // mu_4 = (1 + 1) / 5 = 2/5, sigma^4 = 4/25: kurtosis 5/2, excess -1/2.
  CHECK(t.excess_kurtosis == doctest::Approx(-0.5));

  const auto point = pmf(ExactPolynomial{1}, 0);
  CHECK(point.probs == std::map<int, Rational>{{0, Rational(1)}});
  CHECK(point.mean == 0);
  CHECK(point.variance == 0);

  const auto assoc = catalog("assoc_stirling", {{"s", 2}});
  const auto p1 = generate(assoc.spec, 1)[1];
  CHECK(kind_of([&] { pmf(p1, 1); }) == ErrorKind::zero_mass);
  CHECK(kind_of([&] { pmf(ExactPolynomial{1, -1, 3}, 2); }) == ErrorKind::invalid_distribution);
}

TEST_CASE("properties: mass, mean and variance identities over the catalog") {
  for (const auto& fam : default_catalog()) {
    CAPTURE(fam.display_name());
    const auto polys = generate(fam.spec, fam.spec.start_index + 30);
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const int n = fam.spec.start_index + static_cast<int>(i);
      if (poly_eval(polys[i], Rational(1)) == 0) continue;
      const auto t = pmf(polys[i], n);
      CHECK(total(t) == 1);
      // derivative identities evaluated independently: sum k p_k, sum k(k-1) p_k.
      const Rational p1 = poly_eval(polys[i], Rational(1));
      Rational s1 = 0, s2 = 0;
      for (int k = 0; k <= polys[i].degree(); ++k) {
        s1 += k * polys[i][k];
        s2 += k * (k - 1) * polys[i][k];
      }
      CHECK(t.mean == s1 / p1);
      CHECK(mean_from_derivative(polys[i]) == t.mean);
      CHECK(t.variance == s2 / p1 + t.mean - t.mean * t.mean);
      CHECK(variance_from_derivatives(polys[i]) == t.variance);
    }
  }
}

TEST_CASE("normal CDF accuracy") {
  CHECK(std::fabs(normal_cdf(0.0) - 0.5) <= 1e-15);
  for (double t = 0.05; t < 8.0; t += 0.37) {
    CHECK(std::fabs(normal_cdf(-t) - (1.0 - normal_cdf(t))) <= 1e-12);
  }
  // Reference values of Phi.
  CHECK(std::fabs(normal_cdf(1.0) - 0.8413447460685429) <= 1e-12);
  CHECK(std::fabs(normal_cdf(-2.5) - 0.0062096653257761) <= 1e-12);
  CHECK(std::fabs(normal_cdf(3.0) - 0.9986501019683699) <= 1e-12);
}

TEST_CASE("normality") {
  CHECK(kind_of([] { normality(pmf(ExactPolynomial{0, 0, 5}, 2), 1); }) ==
        ErrorKind::zero_variance);
  CHECK(kind_of([] { normality(pmf(ExactPolynomial{0, 1}, 1), 1); }) ==
        ErrorKind::invalid_argument);

  const auto polys = generate(catalog("stirling2").spec, 400);
  const auto r50 = normality(pmf(polys[50], 50), 1);
  const auto r400 = normality(pmf(polys[400], 400), 1);
  CHECK(r400.ks_continuity < r50.ks_continuity);
  CHECK(std::fabs(r400.standardized_third) < std::fabs(r50.standardized_third));
  CHECK(r50.normalization.center == doctest::Approx(50 / std::log(50.0)));
  CHECK(r50.normalization.scale == doctest::Approx(std::sqrt(50.0) / std::log(50.0)));

  // Lattice-jump bound.
  for (int n : {5, 20, 50, 120}) {
    const auto t = pmf(polys[static_cast<std::size_t>(n)], n);
    double max_mass = 0;
    for (const auto& [k, p] : t.probs) max_mass = std::max(max_mass, p.get_d());
    const auto r = normality(t, 1);
    CHECK(r.ks_continuity <= r.ks_plain + max_mass + 1e-15);
    CHECK(r.standardized_fourth == doctest::Approx(t.excess_kurtosis + 3.0));
  }

  // Two-point law by hand: P(0) = P(1) = 1/2, mean 1/2, deviation 1/2.
  const auto coin = normality(pmf(ExactPolynomial{1, 1}, 2), 1);
  CHECK(coin.ks_plain == doctest::Approx(std::max(0.5 - normal_cdf(-1.0), normal_cdf(-1.0))));
  CHECK(coin.ks_continuity == doctest::Approx(normal_cdf(-2.0)).epsilon(1e-9));
}

TEST_CASE("mean identity") {
  auto r = mean_identity_check(catalog("stirling2"), 3);
  CHECK(r.ok);
  CHECK(r.checked_up_to == 3);
  // n = 3: B_4 / B_3 - 1 = 15/5 - 1 = 2.
  CHECK(pmf(generate(catalog("stirling2").spec, 3)[3], 3).mean == Rational(15) / 5 - 1);
  CHECK(mean_identity_check(catalog("dowling", {{"m", 2}}), 10).ok);
  CHECK(mean_identity_check(catalog("whitney", {{"m", 3}, {"c", 2}}), 10).ok);
  CHECK(kind_of([] { mean_identity_check(catalog("assoc_stirling"), 5); }) ==
        ErrorKind::unsupported_shape);
}

TEST_CASE("clt_scan") {
  const int ns[] = {50, 100, 200, 400};
  const auto reports = clt_scan(catalog("stirling2"), ns);
  REQUIRE(reports.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(reports[i].n == ns[i]);
  for (std::size_t i = 1; i < 4; ++i) CHECK(reports[i].ks_continuity <= reports[i - 1].ks_continuity);

  const int nd[] = {50, 200};
  const auto dowling = clt_scan(catalog("dowling", {{"m", 2}}), nd);
  CHECK(dowling.size() == 2);
  CHECK(dowling[1].ks_continuity < dowling[0].ks_continuity);

  const int bad[] = {1};
  CHECK(kind_of([&] { clt_scan(catalog("stirling2"), bad); }) == ErrorKind::invalid_argument);

  // Serial and concurrent evaluation agree.
  const auto polys = generate(catalog("stirling2").spec, 200);
  const auto one = normality(pmf(polys[200], 200), 1);
  CHECK(one.ks_continuity == reports[2].ks_continuity);
  CHECK(one.theorem_ks_plain == reports[2].theorem_ks_plain);
}
