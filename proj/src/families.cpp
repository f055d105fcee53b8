#include "ddrec/families.hpp"

#include <algorithm>
#include <functional>

#include "ddrec/error.hpp"

namespace ddrec {

namespace {

const ExactPolynomial kZeroPoly{};

ExactPolynomial x_times(const Rational& c) { return ExactPolynomial::monomial(c, 1); }

void trim(SaddleFunction& f) {
  while (!f.q1.empty() && f.q1.back().is_zero()) f.q1.pop_back();
}

// (x/m)(e^{mz} - sum_{j<s} (mz)^j / j!) + r z, the exponent shared by the
// Whitney-type and associated families. s = 1 gives r z + (x/m)(e^{mz} - 1).
SaddleFunction associated_exponent(const Rational& m, const Rational& r, int s) {
  SaddleFunction f;
  f.m = m;
  f.q2 = x_times(1 / m);
  f.q1.resize(static_cast<std::size_t>(std::max(s, 2)));
  Rational mp = 1;  // m^p / p!
  for (int p = 0; p < s; ++p) {
    f.q1[p] = x_times(-mp / m);
    mp *= m;
    mp /= p + 1;
  }
  f.q1[1] = f.q1[1] + ExactPolynomial::constant(r);
  trim(f);
  return f;
}

RecurrenceSpec whitney_spec(long m, long c, std::string label) {
  RecurrenceSpec spec;
  spec.gamma = ExactPolynomial{Rational(c), Rational(1)};
  spec.m = Rational(m);
  spec.label = std::move(label);
  return spec;
}

std::vector<std::string> whitney_tags(long m, long c) {
  std::vector<std::string> tags;
  if (c == 1) {
    static const std::map<long, std::string> dowling_numbers = {
        {2, "A007405"}, {3, "A003575"}, {4, "A003576"}, {5, "A003577"},
        {6, "A003578"}, {7, "A003579"}, {8, "A003580"}, {9, "A003581"},
        {10, "A003582"}, {64, "A364069"}, {624, "A364070"}};
    if (auto it = dowling_numbers.find(m); it != dowling_numbers.end()) {
      tags.push_back(it->second);
    }
  }
  if (c == 0 && m >= 2 && m <= 10) {
    tags.push_back("A0" + std::to_string(75497 + (m - 2)));
  }
  if (c == m - 1) {
    static const std::map<long, std::string> frobenius = {
        {1, "A048993"}, {2, "A039755"}, {3, "A225468"}, {4, "A225469"}};
    if (auto it = frobenius.find(m); it != frobenius.end()) tags.push_back(it->second);
  }
  return tags;
}

using Params = std::map<std::string, long>;

struct Builder {
  FamilyInfo info;
  std::function<FamilyDescriptor(const Params&)> build;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::invalid_argument, "parameter out of range: " + what);
}

FamilyDescriptor whitney_like(std::string name, long m, long c) {
  FamilyDescriptor fam;
  fam.name = std::move(name);
  fam.spec = whitney_spec(m, c, fam.name);
  fam.saddle = associated_exponent(Rational(m), Rational(c), 1);
  fam.oeis_refs = whitney_tags(m, c);
  return fam;
}

const std::vector<Builder>& builders() {
  static const std::vector<Builder> table = [] {
    std::vector<Builder> t;
    t.push_back({{"stirling2", {}, "Stirling numbers of the second kind"},
                 [](const Params&) {
                   FamilyDescriptor f = whitney_like("stirling2", 1, 0);
                   f.oeis_refs = {"A048993"};
                   return f;
                 }});
    t.push_back({{"whitney", {{"m", 2}, {"c", 1}}, "Whitney numbers, T(n,k) = T(n-1,k-1) + (mk+c) T(n-1,k)"},
                 [](const Params& p) {
                   const long m = p.at("m"), c = p.at("c");
                   require(m >= 1, "whitney needs m >= 1");
                   return whitney_like("whitney", m, c);
                 }});
    t.push_back({{"translated_whitney", {{"m", 2}}, "translated Whitney numbers (c = 0)"},
                 [](const Params& p) {
                   const long m = p.at("m");
                   require(m >= 1, "translated_whitney needs m >= 1");
                   return whitney_like("translated_whitney", m, 0);
                 }});
    t.push_back({{"dowling", {{"m", 2}}, "Whitney numbers of Dowling lattices (c = 1); row sums are Dowling numbers"},
                 [](const Params& p) {
                   const long m = p.at("m");
                   require(m >= 1, "dowling needs m >= 1");
                   return whitney_like("dowling", m, 1);
                 }});
    t.push_back({{"r_stirling", {{"r", 2}}, "r-Stirling numbers of the second kind, rows start at n = r"},
                 [](const Params& p) {
                   const long r = p.at("r");
                   require(r >= 0, "r_stirling needs r >= 0");
                   FamilyDescriptor f;
                   f.name = "r_stirling";
                   f.spec = whitney_spec(1, 0, "r_stirling");
                   f.spec.start_index = static_cast<int>(r);
                   f.spec.start_poly = ExactPolynomial::monomial(1, static_cast<int>(r));
                   f.saddle = associated_exponent(Rational(1), Rational(r), 1);
                   f.offset = static_cast<int>(r);
                   if (r <= 1) f.oeis_refs = {"A048993"};
                   if (r >= 2 && r <= 4) f.oeis_refs = {"A14349" + std::to_string(2 + r)};
                   return f;
                 }});
    t.push_back({{"sheffer", {{"d", 2}, {"a", 1}}, "Sheffer triangles S2[d,a]"},
                 [](const Params& p) {
                   const long d = p.at("d"), a = p.at("a");
                   require(d >= 1, "sheffer needs d >= 1");
                   require(a >= 0, "sheffer needs a >= 0");
                   FamilyDescriptor f;
                   f.name = "sheffer";
                   f.spec.gamma = ExactPolynomial{Rational(a), Rational(d)};
                   f.spec.m = Rational(d);
                   f.spec.label = "sheffer";
                   // gamma_1 / m = 1, so q2(u) = u.
                   f.saddle.m = Rational(d);
                   f.saddle.q1 = {x_times(-1), ExactPolynomial::constant(a)};
                   f.saddle.q2 = x_times(1);
                   trim(f.saddle);
                   if (d == 1 && a == 0) f.oeis_refs = {"A048993"};
                   return f;
                 }});
    t.push_back({{"stirling_frobenius", {{"m", 2}}, "Stirling-Frobenius subset numbers (c = m - 1)"},
                 [](const Params& p) {
                   const long m = p.at("m");
                   require(m >= 1, "stirling_frobenius needs m >= 1");
                   return whitney_like("stirling_frobenius", m, m - 1);
                 }});
    t.push_back({{"galton", {{"m", 2}, {"c", -1}}, "Galton triangles, rows start at n = 1 with P_1 = x"},
                 [](const Params& p) {
                   const long m = p.at("m"), c = p.at("c");
                   require(m >= 1, "galton needs m >= 1");
                   FamilyDescriptor f;
                   f.name = "galton";
                   f.spec = whitney_spec(m, c, "galton");
                   f.spec.start_index = 1;
                   f.spec.start_poly = x_times(1);
                   // x * Whitney(m, c + m) shifted by one row.
                   f.saddle = associated_exponent(Rational(m), Rational(c + m), 1);
                   f.offset = 1;
                   if (m == 2 && c == -1) f.oeis_refs = {"A186695"};
                   if (m == 3 && c == -2) f.oeis_refs = {"A111577"};
                   return f;
                 }});
    t.push_back({{"assoc_stirling", {{"s", 2}}, "s-associated Stirling numbers (all blocks of size >= s)"},
                 [](const Params& p) {
                   const long s = p.at("s");
                   require(s >= 1, "assoc_stirling needs s >= 1");
                   FamilyDescriptor f;
                   f.name = "assoc_stirling";
                   f.spec.gamma = {};
                   f.spec.m = 1;
                   f.spec.lags = {LagTerm{static_cast<int>(s), x_times(1), true}};
                   f.spec.label = "assoc_stirling";
                   f.saddle = associated_exponent(Rational(1), Rational(0), static_cast<int>(s));
                   return f;
                 }});
    t.push_back({{"r_whitney_assoc", {{"m", 2}, {"r", 1}, {"s", 2}}, "s-associated r-Whitney numbers"},
                 [](const Params& p) {
                   const long m = p.at("m"), r = p.at("r"), s = p.at("s");
                   require(m >= 1, "r_whitney_assoc needs m >= 1");
                   require(r >= 0, "r_whitney_assoc needs r >= 0");
                   require(s >= 1, "r_whitney_assoc needs s >= 1");
                   FamilyDescriptor f;
                   f.name = "r_whitney_assoc";
                   f.spec.gamma = ExactPolynomial::constant(Rational(r));
                   f.spec.m = Rational(m);
                   Integer scale;
                   mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(m),
                                 static_cast<unsigned long>(s - 1));
                   f.spec.lags = {LagTerm{static_cast<int>(s), x_times(Rational(scale)), true}};
                   f.spec.label = "r_whitney_assoc";
                   f.saddle = associated_exponent(Rational(m), Rational(r), static_cast<int>(s));
                   return f;
                 }});
    t.push_back({{"type_b", {{"m", 2}, {"c", 1}}, "colored set partitions of type B_n"},
                 [](const Params& p) {
                   const long m = p.at("m"), c = p.at("c");
                   require(m >= 1, "type_b needs m >= 1");
                   require(c >= 1, "type_b needs c >= 1");
                   FamilyDescriptor f = whitney_like("type_b", m, c);
                   f.oeis_refs.clear();
                   return f;
                 }});
    return t;
  }();
  return table;
}

}  // namespace

const ExactPolynomial& SaddleFunction::q1_coeff(int p) const {
  if (p < 0 || p >= static_cast<int>(q1.size())) return kZeroPoly;
  return q1[static_cast<std::size_t>(p)];
}

BivariateSeries exponent_series(const SaddleFunction& f, int order) {
  BivariateSeries out(order);
  // (j m)^p / p! for each power j of q2.
  std::vector<Rational> scale(static_cast<std::size_t>(f.q2.degree() + 1), Rational(1));
  for (int p = 0; p <= order; ++p) {
    ExactPolynomial term = f.q1_coeff(p);
    std::vector<Rational> from_q2(static_cast<std::size_t>(f.q2.degree() + 1));
    for (int j = 0; j <= f.q2.degree(); ++j) {
      if (p > 0) {
        scale[j] *= f.m * j;
        scale[j] /= p;
      }
      from_q2[j] = f.q2[j] * scale[j];
    }
    out.set(p, term + ExactPolynomial(std::move(from_q2)));
  }
  return out;
}

TheoremConstants theorem_constants(const SaddleFunction& f) {
  TheoremConstants tc;
  tc.d = std::max(f.q2.degree(), 0);
  tc.alpha_d = f.q2[tc.d];
  tc.hypothesis_ok = tc.d >= 1 && tc.alpha_d > 0 && f.m > 0;
  return tc;
}

namespace {

// The c(x) of the basic shape, or the zero polynomial when there is no lag.
const ExactPolynomial& basic_shape_c(const RecurrenceSpec& spec) {
  spec.validate();
  const bool basic_start = spec.start_index == 0 && spec.start_poly == ExactPolynomial{1};
  const bool basic_lags =
      spec.lags.empty() ||
      (spec.lags.size() == 1 && spec.lags[0].depth == 2 && spec.lags[0].binom_weight);
  if (!basic_start || !basic_lags) {
    throw Error(ErrorKind::unsupported_shape,
                "closed form is derived only for P_n = gamma P_{n-1} + m x P'_{n-1} + "
                "(n-1) c P_{n-2} with P_0 = 1; use a catalog family");
  }
  return spec.lags.empty() ? kZeroPoly : spec.lags[0].kappa;
}

}  // namespace

TheoremConstants theorem_constants_from_coefficients(const RecurrenceSpec& spec) {
  const ExactPolynomial& c = basic_shape_c(spec);
  const ExactPolynomial& gamma = spec.gamma;
  const Rational& m = spec.m;
  TheoremConstants tc;
  tc.d = std::max((gamma + c).degree(), 0);
  const int j = tc.d;
  if (j >= 1) tc.alpha_d = gamma[j] / (m * j) + c[j] / (m * m * j * j);
  tc.hypothesis_ok = tc.d >= 1 && tc.alpha_d > 0 && m > 0;
  return tc;
}

SaddleFunction build_exponent(const RecurrenceSpec& spec) {
  const ExactPolynomial& c = basic_shape_c(spec);
  const ExactPolynomial& gamma = spec.gamma;
  const Rational& m = spec.m;

  std::vector<Rational> q1_const, q1_linear{gamma[0]}, q2;
  const int top = std::max(gamma.degree(), c.degree());
  q1_const.resize(static_cast<std::size_t>(std::max(top, 0) + 1));
  q1_linear.resize(q1_const.size());
  q2.resize(q1_const.size());
  for (int j = 1; j <= top; ++j) {
    const Rational g = gamma[j] / (m * j);
    const Rational cj = c[j] / (m * m * j * j);
    q1_const[j] = -g - cj;
    q1_linear[j] = -c[j] / (m * j);
    q2[j] = g + cj;
  }

  SaddleFunction f;
  f.m = m;
  f.q1 = {ExactPolynomial(std::move(q1_const)), ExactPolynomial(std::move(q1_linear)),
          ExactPolynomial::constant(c[0] / 2)};
  f.q2 = ExactPolynomial(std::move(q2));
  trim(f);
  return f;
}

std::string FamilyDescriptor::display_name() const {
  if (parameters.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (i) out += ",";
    out += parameters[i].first + "=" + std::to_string(parameters[i].second);
  }
  return out + ")";
}

long FamilyDescriptor::parameter(std::string_view key) const {
  for (const auto& [k, v] : parameters) {
    if (k == key) return v;
  }
  throw Error(ErrorKind::invalid_argument,
              name + " has no parameter '" + std::string(key) + "'");
}

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = [] {
    std::vector<FamilyInfo> out;
    for (const auto& b : builders()) out.push_back(b.info);
    return out;
  }();
  return table;
}

FamilyDescriptor catalog(std::string_view name, const std::map<std::string, long>& params) {
  for (const auto& b : builders()) {
    if (b.info.name != name) continue;
    Params full;
    std::vector<std::pair<std::string, long>> ordered;
    for (const auto& [key, def] : b.info.defaults) {
      auto it = params.find(key);
      full[key] = it == params.end() ? def : it->second;
      ordered.emplace_back(key, full[key]);
    }
    for (const auto& [key, value] : params) {
      if (!full.count(key)) {
        throw Error(ErrorKind::invalid_argument,
                    "family " + std::string(name) + " has no parameter '" + key + "'");
      }
    }
    FamilyDescriptor f = b.build(full);
    f.parameters = std::move(ordered);
    f.spec.label = f.display_name();
    f.spec.validate();
    return f;
  }
  throw Error(ErrorKind::unknown_family, "unknown family '" + std::string(name) + "'");
}

std::vector<FamilyDescriptor> default_catalog() {
  std::vector<FamilyDescriptor> out;
  for (const auto& info : family_table()) out.push_back(catalog(info.name));
  return out;
}

const std::vector<std::string>& untagged_oeis_refs() {
  static const std::vector<std::string> refs = {"A154537", "A282629", "A225466", "A285061",
                                                "A225467"};
  return refs;
}

NonnegativityReport validate_nonnegativity(std::span<const TriangleRow> rows) {
  NonnegativityReport report;
  for (const auto& row : rows) {
    Rational sum = 0;
    for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
      if (row.coeffs[k] < 0 && !report.first_violation) {
        report.nonnegative = false;
        report.first_violation = {row.n, static_cast<int>(k)};
      }
      sum += row.coeffs[k];
    }
    if (sum == 0) report.zero_sum_rows.push_back(row.n);
  }
  return report;
}

EgfCheck verify_egf_identity(const FamilyDescriptor& family, int order) {
  EgfCheck check;
  check.order = order;
  const BivariateSeries egf = series_exp(exponent_series(family.saddle, order));
  const auto polys = generate(family.spec, family.offset + order);
  const int base = family.spec.start_index;
  for (int n = 0; n <= order; ++n) {
    const int index = family.offset + n;
    const ExactPolynomial& p = polys.at(static_cast<std::size_t>(index - base));
    if (p != poly_shift(egf_term(egf, n), family.offset)) {
      check.ok = false;
      check.first_mismatch = n;
      break;
    }
  }
  return check;
}

}  // namespace ddrec
