#include <doctest.h>

#include <random>

#include "ddrec/algebra/polynomial.hpp"
#include "ddrec/algebra/rational.hpp"
#include "ddrec/algebra/series.hpp"
#include "ddrec/error.hpp"

using namespace ddrec;

namespace {

const ExactPolynomial x{0, 1};

// Block-count distribution of the set partitions of [n] by brute force over
// restricted-growth strings; independent of every algebra routine.
std::vector<long> partitions_by_blocks(int n) {
  std::vector<long> counts(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      ++counts[static_cast<std::size_t>(blocks)];
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(rec, 0, 0);
  return counts;
}

ExactPolynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree), num(-9, 9), den(1, 4);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int j = 0; j <= d; ++j) c.emplace_back(num(rng), den(rng));
  for (auto& q : c) q.canonicalize();
  return ExactPolynomial(std::move(c));
}

BivariateSeries random_series(std::mt19937& rng, int order, bool zero_constant) {
  BivariateSeries s(order);
  for (int p = zero_constant ? 1 : 0; p <= order; ++p) s.set(p, random_poly(rng, 2));
  return s;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  Rational q(6, 4);
  q.canonicalize();
  CHECK(to_string(q) == "3/2");
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(log_abs(factorial(1000)) == doctest::Approx(std::lgamma(1001.0)).epsilon(1e-12));
  CHECK(log_abs(Rational(-1, 8)) == doctest::Approx(std::log(0.125)));
}

TEST_CASE("poly_add") {
  CHECK(ExactPolynomial{1, 1} + ExactPolynomial{-1, 0, 1} == ExactPolynomial{0, 1, 1});
  const ExactPolynomial p{3, 0, -2};
  CHECK(p + ExactPolynomial{} == p);
  const ExactPolynomial zero = x + (-x);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
}

TEST_CASE("poly_mul") {
  CHECK(ExactPolynomial{1, 1} * ExactPolynomial{1, 1} == ExactPolynomial{1, 2, 1});
  const ExactPolynomial p{Rational(1, 2), 0, 5};
  CHECK(p * ExactPolynomial{1} == p);
  CHECK((p * ExactPolynomial{}).is_zero());
}

TEST_CASE("poly_derivative") {
  CHECK(poly_derivative(ExactPolynomial{0, 1, 1}) == ExactPolynomial{1, 2});
  CHECK(poly_derivative(ExactPolynomial{7}).is_zero());
  CHECK(poly_derivative(ExactPolynomial{0, 1, 3, 1}) == ExactPolynomial{1, 6, 3});
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(ExactPolynomial{0, 1, 1}, Rational(1)) == 2);
  // Bell number B_3 from enumeration.
  const auto row3 = partitions_by_blocks(3);
  long bell3 = 0;
  for (long c : row3) bell3 += c;
  CHECK(poly_eval(ExactPolynomial{0, 1, 3, 1}, Rational(1)) == bell3);
  const ExactPolynomial p{Rational(-5, 3), 2, 9};
  CHECK(poly_eval(p, Rational(0)) == Rational(-5, 3));
  CHECK(poly_eval(p, 0.5) == doctest::Approx(-5.0 / 3 + 1 + 9.0 / 4));
}

TEST_CASE("poly shift, scale and rendering") {
  CHECK(poly_shift(ExactPolynomial{1, 1}, 2) == ExactPolynomial{0, 0, 1, 1});
  CHECK(poly_scale(ExactPolynomial{2, 4}, Rational(1, 2)) == ExactPolynomial{1, 2});
  CHECK(to_string(ExactPolynomial{0, 1, 3, 1}) == "x^3 + 3x^2 + x");
  CHECK(to_string(ExactPolynomial{1, Rational(-1, 2)}) == "-1/2x + 1");
  CHECK(to_string(ExactPolynomial{}) == "0");
  CHECK(ExactPolynomial{0, 2}.has_integer_coeffs());
  CHECK_FALSE(ExactPolynomial{Rational(1, 3)}.has_integer_coeffs());
  CHECK(ExactPolynomial{1, 2}[5] == 0);
}

TEST_CASE("property: degree of a product is the sum of degrees") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly(rng, 6), b = random_poly(rng, 6);
    const auto prod = a * b;
    if (a.is_zero() || b.is_zero()) {
      CHECK(prod.is_zero());
    } else {
      CHECK(prod.degree() == a.degree() + b.degree());
    }
    CHECK(poly_eval(prod, Rational(3, 7)) == poly_eval(a, Rational(3, 7)) * poly_eval(b, Rational(3, 7)));
    CHECK(a * b == b * a);
    CHECK(poly_sub(a + b, b) == a);
  }
}

TEST_CASE("series_exp examples") {
  SUBCASE("exp(xz) to order 3") {
    BivariateSeries g(3);
    g.set(1, x);
    const auto e = series_exp(g);
    CHECK(e[0] == ExactPolynomial{1});
    CHECK(e[1] == x);
    CHECK(e[2] == ExactPolynomial{0, 0, Rational(1, 2)});
    CHECK(e[3] == ExactPolynomial{0, 0, 0, Rational(1, 6)});
  }
  SUBCASE("exp(0) = 1") {
    const auto e = series_exp(BivariateSeries(5));
    CHECK(e[0] == ExactPolynomial{1});
    for (int p = 1; p <= 5; ++p) CHECK(e[p].is_zero());
  }
  SUBCASE("exp(x(e^z - 1)) gives the block-count rows of set partitions") {
    const int order = 8;
    BivariateSeries g(order);
    for (int p = 1; p <= order; ++p) g.set(p, poly_scale(x, Rational(1) / Rational(factorial(p))));
    const auto e = series_exp(g);
    CHECK(egf_term(e, 4) == ExactPolynomial{0, 1, 7, 6, 1});
    for (int n = 0; n <= order; ++n) {
      const auto counts = partitions_by_blocks(n);
      std::vector<Rational> c(counts.begin(), counts.end());
      CHECK(egf_term(e, n) == ExactPolynomial(c));
    }
  }
  SUBCASE("nonzero constant term is rejected") {
    BivariateSeries g(2);
    g.set(0, ExactPolynomial{1});
    CHECK_THROWS_AS(series_exp(g), Error);
  }
}

TEST_CASE("property: exp(g) exp(-g) = 1 and the defining ODE") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int order = 6;
    const auto g = random_series(rng, order, true);
    const auto eg = series_exp(g);
    const auto prod = series_mul(eg, series_exp(series_neg(g)));
    CHECK(prod[0] == ExactPolynomial{1});
    for (int p = 1; p <= order; ++p) CHECK(prod[p].is_zero());

    const auto lhs = series_derivative(eg);
    const auto rhs = series_mul(series_derivative(g), series_truncate(eg, order - 1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("series utilities") {
  BivariateSeries a(2, {ExactPolynomial{1}, x, ExactPolynomial{0, 0, 1}});
  CHECK_THROWS(BivariateSeries(2, {ExactPolynomial{1}}));
  CHECK(series_add(a, series_neg(a)) == BivariateSeries(2));
  const auto at2 = series_at_x(a, Rational(2));
  CHECK(at2[2] == ExactPolynomial{4});
  CHECK(series_mul(a, BivariateSeries(1, {ExactPolynomial{1}, ExactPolynomial{}})).order() == 1);
  CHECK(series_truncate(a, 1).order() == 1);
  CHECK(egf_term(a, 2) == ExactPolynomial{0, 0, 2});
}
