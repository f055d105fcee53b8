#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ddrec/algebra/polynomial.hpp"

namespace ddrec {

/// One term weight(n) * kappa(x) * P_{n-depth}(x) of the recurrence, where
/// weight(n) = C(n-1, depth-1) when binom_weight is set and 1 otherwise.
/// Any m^{depth-1} scaling is folded into kappa.
struct LagTerm {
  int depth = 2;
  ExactPolynomial kappa;
  bool binom_weight = true;

  friend bool operator==(const LagTerm&, const LagTerm&) = default;
};

/// P_n = gamma P_{n-1} + m x P'_{n-1} + sum over lags, for n > start_index,
/// with P_{start_index} = start_poly and P_j = 0 for j < start_index.
struct RecurrenceSpec {
  ExactPolynomial gamma;
  Rational m{1};
  std::vector<LagTerm> lags;
  int start_index = 0;
  ExactPolynomial start_poly{1};
  std::string label;

  /// Throws Error(invalid_argument) unless m > 0, start_poly != 0,
  /// start_index >= 0 and lag depths are >= 1 and distinct.
  void validate() const;
  int max_depth() const noexcept;
  /// Largest polynomial degree among gamma and the lag coefficients.
  int coefficient_degree() const noexcept;
};

/// Field-wise equality ignoring label and lag order.
bool equivalent(const RecurrenceSpec& a, const RecurrenceSpec& b);

struct TriangleRow {
  int n = 0;
  /// Coefficients of P_n, k = 0..degree; the zero polynomial gives {0}.
  std::vector<Rational> coeffs;

  friend bool operator==(const TriangleRow&, const TriangleRow&) = default;
};

TriangleRow make_row(int n, const ExactPolynomial& p);

/// Computes P_n from history = {P_{n-1}, P_{n-2}, ...}. Entries whose index
/// falls below start_index are ignored (treated as zero), so the history may
/// be shorter than the deepest lag near the start.
///
/// Coefficient-parallel kernel: every output coefficient is independent, and
/// the loop over k runs under OpenMP when available.
ExactPolynomial advance(const RecurrenceSpec& spec,
                        std::span<const ExactPolynomial> history, int n);

/// Serial reference for advance, assembled from poly_mul / poly_derivative.
ExactPolynomial advance_reference(const RecurrenceSpec& spec,
                                  std::span<const ExactPolynomial> history, int n);

/// P_{start_index}, ..., P_N.
std::vector<ExactPolynomial> generate(const RecurrenceSpec& spec, int max_n);

/// Streams P_{start_index}..P_N to `visit` keeping only a window of
/// max_depth() polynomials alive.
void for_each_polynomial(const RecurrenceSpec& spec, int max_n,
                         const std::function<void(int, const ExactPolynomial&)>& visit);

std::vector<TriangleRow> triangle(const RecurrenceSpec& spec, int max_n);

/// T_{n,k} = u T_{n-1,k-1} + (a + b k) T_{n-1,k}, T_{0,0} = 1, rows 0..N.
/// Parallel over k within a row.
std::vector<TriangleRow> triangle_linear(const Rational& u, const Rational& a,
                                         const Rational& b, int max_n);

/// Serial reference for triangle_linear.
std::vector<TriangleRow> triangle_linear_reference(const Rational& u, const Rational& a,
                                                   const Rational& b, int max_n);

Rational row_sum(const TriangleRow& row);

}  // namespace ddrec
