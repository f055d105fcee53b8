#include "ddrec/recurrence.hpp"

#include <algorithm>
#include <set>

#include "ddrec/error.hpp"

namespace ddrec {

namespace {

// Rows shorter than this are advanced serially; thread startup dominates.
constexpr int kParallelThreshold = 64;

struct LagSource {
  const ExactPolynomial* poly;
  const ExactPolynomial* kappa;
  Rational weight;
};

void check_index(const RecurrenceSpec& spec, int n) {
  if (n <= spec.start_index) {
    throw Error(ErrorKind::invalid_index,
                "advance needs n > start_index (n=" + std::to_string(n) +
                    ", start_index=" + std::to_string(spec.start_index) + ")");
  }
}

// P_{n-back} from the history, or nullptr when that index is below the start.
const ExactPolynomial* lookup(const RecurrenceSpec& spec,
                              std::span<const ExactPolynomial> history, int n, int back) {
  const int index = n - back;
  if (index < spec.start_index) return nullptr;
  const auto slot = static_cast<std::size_t>(back - 1);
  if (slot >= history.size()) {
    throw Error(ErrorKind::invalid_argument,
                "history is missing P_" + std::to_string(index));
  }
  return &history[slot];
}

std::vector<LagSource> lag_sources(const RecurrenceSpec& spec,
                                   std::span<const ExactPolynomial> history, int n) {
  std::vector<LagSource> out;
  for (const auto& lag : spec.lags) {
    const ExactPolynomial* p = lookup(spec, history, n, lag.depth);
    if (p == nullptr || p->is_zero() || lag.kappa.is_zero()) continue;
    Rational w = lag.binom_weight
                     ? Rational(binomial(static_cast<unsigned long>(n - 1),
                                         static_cast<unsigned long>(lag.depth - 1)))
                     : Rational(1);
    if (w == 0) continue;
    out.push_back({p, &lag.kappa, std::move(w)});
  }
  return out;
}

}  // namespace

void RecurrenceSpec::validate() const {
  if (m <= 0) {
    throw Error(ErrorKind::invalid_argument,
                "m must be positive (m > 0 is a hypothesis of the limit theorem), got " +
                    m.get_str());
  }
  if (start_poly.is_zero()) {
    throw Error(ErrorKind::invalid_argument, "start polynomial must be nonzero");
  }
  if (start_index < 0) {
    throw Error(ErrorKind::invalid_argument, "start index must be >= 0");
  }
  std::set<int> depths;
  for (const auto& lag : lags) {
    if (lag.depth < 1) {
      throw Error(ErrorKind::invalid_argument, "lag depth must be >= 1");
    }
    if (!depths.insert(lag.depth).second) {
      throw Error(ErrorKind::invalid_argument,
                  "duplicate lag depth " + std::to_string(lag.depth));
    }
  }
}

int RecurrenceSpec::max_depth() const noexcept {
  int d = 1;
  for (const auto& lag : lags) d = std::max(d, lag.depth);
  return d;
}

int RecurrenceSpec::coefficient_degree() const noexcept {
  int d = gamma.degree();
  for (const auto& lag : lags) d = std::max(d, lag.kappa.degree());
  return d;
}

bool equivalent(const RecurrenceSpec& a, const RecurrenceSpec& b) {
  auto sorted = [](std::vector<LagTerm> lags) {
    std::sort(lags.begin(), lags.end(),
              [](const LagTerm& l, const LagTerm& r) { return l.depth < r.depth; });
    return lags;
  };
  return a.gamma == b.gamma && a.m == b.m && a.start_index == b.start_index &&
         a.start_poly == b.start_poly && sorted(a.lags) == sorted(b.lags);
}

TriangleRow make_row(int n, const ExactPolynomial& p) {
  TriangleRow row{n, {}};
  if (p.is_zero()) {
    row.coeffs.emplace_back(0);
  } else {
    row.coeffs.assign(p.coeffs().begin(), p.coeffs().end());
  }
  return row;
}

ExactPolynomial advance(const RecurrenceSpec& spec,
                        std::span<const ExactPolynomial> history, int n) {
  check_index(spec, n);
  const ExactPolynomial* prev = lookup(spec, history, n, 1);
  const std::vector<LagSource> lags = lag_sources(spec, history, n);

  int degree = -1;
  if (prev != nullptr && !prev->is_zero()) {
    degree = std::max(degree, prev->degree());
    if (!spec.gamma.is_zero()) degree = std::max(degree, prev->degree() + spec.gamma.degree());
  }
  for (const auto& lag : lags) degree = std::max(degree, lag.poly->degree() + lag.kappa->degree());
  if (degree < 0) return {};

  const int len = degree + 1;
  const ExactPolynomial& gamma = spec.gamma;
  const Rational& m = spec.m;
  std::vector<Rational> out(static_cast<std::size_t>(len));

#pragma omp parallel for schedule(dynamic, 8) if (len >= kParallelThreshold)
  for (int k = 0; k < len; ++k) {
    Rational acc = 0;
    Rational t;
    if (prev != nullptr) {
      const int top = std::min(k, gamma.degree());
      for (int j = 0; j <= top; ++j) {
        const Rational& pc = (*prev)[k - j];
        if (pc == 0 || gamma[j] == 0) continue;
        t = gamma[j] * pc;
        acc += t;
      }
      if (k > 0 && (*prev)[k] != 0) {
        t = m * (*prev)[k];
        t *= k;
        acc += t;
      }
    }
    for (const auto& lag : lags) {
      Rational part = 0;
      const int top = std::min(k, lag.kappa->degree());
      for (int j = 0; j <= top; ++j) {
        const Rational& pc = (*lag.poly)[k - j];
        if (pc == 0 || (*lag.kappa)[j] == 0) continue;
        t = (*lag.kappa)[j] * pc;
        part += t;
      }
      if (part != 0) {
        part *= lag.weight;
        acc += part;
      }
    }
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial advance_reference(const RecurrenceSpec& spec,
                                  std::span<const ExactPolynomial> history, int n) {
  check_index(spec, n);
  ExactPolynomial result;
  if (const ExactPolynomial* prev = lookup(spec, history, n, 1)) {
    result = spec.gamma * *prev +
             ExactPolynomial::monomial(spec.m, 1) * poly_derivative(*prev);
  }
  for (const auto& lag : spec.lags) {
    const ExactPolynomial* p = lookup(spec, history, n, lag.depth);
    if (p == nullptr) continue;
    Rational w = 1;
    if (lag.binom_weight) {
      w = Rational(binomial(static_cast<unsigned long>(n - 1),
                            static_cast<unsigned long>(lag.depth - 1)));
    }
    result = result + w * (lag.kappa * *p);
  }
  return result;
}

void for_each_polynomial(const RecurrenceSpec& spec, int max_n,
                         const std::function<void(int, const ExactPolynomial&)>& visit) {
  spec.validate();
  if (max_n < spec.start_index) {
    throw Error(ErrorKind::invalid_index,
                "max n " + std::to_string(max_n) + " is below start index " +
                    std::to_string(spec.start_index));
  }
  const auto window = static_cast<std::size_t>(spec.max_depth());
  // history[0] is the most recent polynomial.
  std::vector<ExactPolynomial> history{spec.start_poly};
  visit(spec.start_index, spec.start_poly);
  for (int n = spec.start_index + 1; n <= max_n; ++n) {
    ExactPolynomial next = advance(spec, history, n);
    visit(n, next);
    history.insert(history.begin(), std::move(next));
    if (history.size() > window) history.pop_back();
  }
}

std::vector<ExactPolynomial> generate(const RecurrenceSpec& spec, int max_n) {
  std::vector<ExactPolynomial> out;
  for_each_polynomial(spec, max_n,
                      [&](int, const ExactPolynomial& p) { out.push_back(p); });
  return out;
}

std::vector<TriangleRow> triangle(const RecurrenceSpec& spec, int max_n) {
  std::vector<TriangleRow> rows;
  for_each_polynomial(spec, max_n, [&](int n, const ExactPolynomial& p) {
    rows.push_back(make_row(n, p));
  });
  return rows;
}

namespace {

void check_linear_range(int max_n) {
  if (max_n < 0) throw Error(ErrorKind::invalid_index, "max n must be >= 0");
}

TriangleRow trimmed(int n, std::vector<Rational> coeffs) {
  return make_row(n, ExactPolynomial(std::move(coeffs)));
}

}  // namespace

std::vector<TriangleRow> triangle_linear(const Rational& u, const Rational& a,
                                         const Rational& b, int max_n) {
  check_linear_range(max_n);
  std::vector<TriangleRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n) + 1);
  std::vector<Rational> prev{Rational(1)};
  rows.push_back(trimmed(0, prev));
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Rational> cur(static_cast<std::size_t>(n) + 1);
#pragma omp parallel for schedule(dynamic, 8) if (n >= kParallelThreshold)
    for (int k = 0; k <= n; ++k) {
      Rational acc = 0;
      if (k >= 1) acc = u * prev[k - 1];
      if (k < n && prev[k] != 0) {
        Rational factor = b * k;
        factor += a;
        factor *= prev[k];
        acc += factor;
      }
      cur[static_cast<std::size_t>(k)] = std::move(acc);
    }
    rows.push_back(trimmed(n, cur));
    prev = std::move(cur);
  }
  return rows;
}

std::vector<TriangleRow> triangle_linear_reference(const Rational& u, const Rational& a,
                                                   const Rational& b, int max_n) {
  check_linear_range(max_n);
  std::vector<std::vector<Rational>> t(static_cast<std::size_t>(max_n) + 1);
  t[0] = {Rational(1)};
  for (int n = 1; n <= max_n; ++n) {
    t[n].assign(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
      const Rational left = k >= 1 ? t[n - 1][k - 1] : Rational(0);
      const Rational up = k < n ? t[n - 1][k] : Rational(0);
      t[n][k] = u * left + (a + b * k) * up;
    }
  }
  std::vector<TriangleRow> rows;
  for (int n = 0; n <= max_n; ++n) rows.push_back(trimmed(n, t[n]));
  return rows;
}

Rational row_sum(const TriangleRow& row) {
  Rational s = 0;
  for (const auto& c : row.coeffs) s += c;
  return s;
}

}  // namespace ddrec
