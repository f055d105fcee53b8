#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddrec/algebra/series.hpp"
#include "ddrec/recurrence.hpp"

namespace ddrec {

/// EGF exponent in the split form f(z,x) = q1(z,x) + q2(x e^{mz}).
///
/// q1[p] is the coefficient of z^p (a polynomial in x); q1 is a polynomial in
/// z so the vector is finite. q2 is univariate with no constant term for every
/// family in the catalog.
struct SaddleFunction {
  std::vector<ExactPolynomial> q1;
  ExactPolynomial q2;
  Rational m{1};

  const ExactPolynomial& q1_coeff(int p) const;

  friend bool operator==(const SaddleFunction&, const SaddleFunction&) = default;
};

/// The exponent expanded as a series in z to the given order, exactly:
/// q2(x e^{mz}) = sum_j q2_j x^j sum_p (jm)^p z^p / p!.
BivariateSeries exponent_series(const SaddleFunction& f, int order);

struct TheoremConstants {
  int d = 0;
  Rational alpha_d;
  /// d >= 1, alpha_d > 0 and m > 0.
  bool hypothesis_ok = false;
};

/// d = degree of q2 (0 when q2 vanishes), alpha_d its coefficient at u^d.
TheoremConstants theorem_constants(const SaddleFunction& f);

/// The same constants computed straight from gamma and c for a spec of the
/// basic shape (see build_exponent): d = deg(gamma + c) and
/// alpha_d = [x^d] (sum gamma_j x^j / (m j) + sum c_j x^j / (m^2 j^2)).
TheoremConstants theorem_constants_from_coefficients(const RecurrenceSpec& spec);

/// Closed-form exponent for P_n = gamma P_{n-1} + m x P'_{n-1} + (n-1) c P_{n-2},
/// P_0 = 1, i.e. at most one lag, of depth 2 with binomial weight.
/// Throws Error(unsupported_shape) for anything else.
SaddleFunction build_exponent(const RecurrenceSpec& spec);

struct FamilyDescriptor {
  std::string name;
  /// Parameters in the family's canonical order.
  std::vector<std::pair<std::string, long>> parameters;
  RecurrenceSpec spec;
  SaddleFunction saddle;
  /// P_{offset + n}(x) = x^offset * n! [z^n] exp(f(z,x)). Nonzero for
  /// r_stirling (offset r) and galton (offset 1).
  int offset = 0;
  std::vector<std::string> oeis_refs;

  /// e.g. "dowling(m=2)", or "stirling2".
  std::string display_name() const;
  long parameter(std::string_view key) const;
};

struct FamilyInfo {
  std::string name;
  std::vector<std::pair<std::string, long>> defaults;
  std::string summary;
};

/// All catalog names with their default parameters, in a fixed order.
const std::vector<FamilyInfo>& family_table();

/// Builds a catalog family. Parameters not given take their defaults.
/// Throws Error(unknown_family) for unknown names and
/// Error(invalid_argument) for unknown keys or out-of-range values.
FamilyDescriptor catalog(std::string_view name, const std::map<std::string, long>& params = {});

/// Every family with its default parameters.
std::vector<FamilyDescriptor> default_catalog();

/// OEIS ids the literature associates with Sheffer-type triangles whose
/// parameters are not pinned down one-to-one; listed, never attached.
const std::vector<std::string>& untagged_oeis_refs();

struct NonnegativityReport {
  bool nonnegative = true;
  /// First (n, k) with a negative coefficient.
  std::optional<std::pair<int, int>> first_violation;
  /// Rows whose coefficients sum to zero; they carry no distribution.
  std::vector<int> zero_sum_rows;
};

NonnegativityReport validate_nonnegativity(std::span<const TriangleRow> rows);

struct EgfCheck {
  bool ok = true;
  int order = 0;
  /// First n whose recurrence polynomial differs from the series term.
  std::optional<int> first_mismatch;
};

/// Compares P_{offset+n} with x^offset n! [z^n] exp(f) for n = 0..order.
EgfCheck verify_egf_identity(const FamilyDescriptor& family, int order);

}  // namespace ddrec
