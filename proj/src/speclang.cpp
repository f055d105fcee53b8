#include "ddrec/speclang.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <optional>
#include <set>
#include <vector>

#include "ddrec/error.hpp"

namespace ddrec {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> lex(std::string_view text, const std::string& origin) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t j = 0; j < count; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    std::size_t len = 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::number;
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::ident;
      while (i + len < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_')) {
        ++len;
      }
    } else if (std::string_view(":;,{}()=+-^*/").find(c) != std::string_view::npos) {
      t.kind = Tok::punct;
    } else {
      throw ParseError(origin, line, column,
                       std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(text.substr(i, len));
    out.push_back(std::move(t));
    advance(len);
  }
  Token end;
  end.kind = Tok::end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::string origin)
      : origin_(std::move(origin)), tokens_(lex(text, origin_)) {}

  ParsedSpec parse_spec() {
    if (peek().kind == Tok::end) fail(peek(), "empty specification");
    std::optional<FamilyRequest> family;
    const Token* family_token = nullptr;
    RecurrenceSpec spec;
    std::set<std::string> seen;
    std::set<int> depths;
    const Token* first_other = nullptr;

    while (peek().kind != Tok::end) {
      const Token& key = expect_ident("a key (gamma, m, lag, start, family)");
      expect(":");
      const bool repeatable = key.text == "lag";
      if (!repeatable && seen.count(key.text)) fail(key, "duplicate key '" + key.text + "'");
      if (key.text == "family") {
        if (first_other) fail(key, "'family' cannot be combined with other keys");
        family = family_value();
        family_token = &key;
      } else {
        if (family_token) fail(key, "'family' cannot be combined with other keys");
        if (!first_other) first_other = &key;
        if (key.text == "gamma") {
          spec.gamma = polynomial();
        } else if (key.text == "m") {
          const Token& at = peek();
          spec.m = rational();
          if (spec.m <= 0) {
            fail(at, "m must be positive (m > 0 is a hypothesis of the limit theorem)");
          }
        } else if (key.text == "lag") {
          lag_value(spec, depths);
        } else if (key.text == "start") {
          start_value(spec);
        } else {
          fail(key, "unknown key '" + key.text + "'");
        }
      }
      seen.insert(key.text);
      expect(";");
    }
    if (family) return *family;
    if (!seen.count("gamma")) fail(peek(), "missing key 'gamma'");
    if (!seen.count("m")) fail(peek(), "missing key 'm'");
    return spec;
  }

  ExactPolynomial polynomial_only() {
    ExactPolynomial p = polynomial();
    expect_end();
    return p;
  }

  FamilyRequest family_only() {
    FamilyRequest r = family_value();
    expect_end();
    return r;
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(origin_, at.line, at.column, message);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }
  bool at_punct(std::string_view p) const {
    return peek().kind == Tok::punct && peek().text == p;
  }
  const Token& expect(std::string_view p) {
    if (!at_punct(p)) fail(peek(), "expected '" + std::string(p) + "'" + found());
    return next();
  }
  const Token& expect_ident(const std::string& what) {
    if (peek().kind != Tok::ident) fail(peek(), "expected " + what + found());
    return next();
  }
  void expect_end() {
    if (peek().kind != Tok::end) fail(peek(), "unexpected trailing input" + found());
  }
  std::string found() const {
    return peek().kind == Tok::end ? ", found end of input" : ", found '" + peek().text + "'";
  }

  Integer unsigned_integer() {
    if (peek().kind != Tok::number) fail(peek(), "expected a number" + found());
    return Integer(next().text, 10);
  }

  long small_integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && (at_punct("-") || at_punct("+"))) negative = next().text == "-";
    const Token& digits = peek();
    Integer v = unsigned_integer();
    if (negative) v = -v;
    if (v > INT_MAX || v < INT_MIN) fail(digits, "integer out of range");
    return v.get_si();
  }

  Rational unsigned_rational() {
    Integer num = unsigned_integer();
    Integer den = 1;
    if (at_punct("/")) {
      next();
      const Token& at = peek();
      den = unsigned_integer();
      if (den == 0) fail(at, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational rational() {
    bool negative = false;
    if (at_punct("-") || at_punct("+")) negative = next().text == "-";
    Rational q = unsigned_rational();
    return negative ? Rational(-q) : q;
  }

  // term := coef ['*'] ['x' ['^' n]] | 'x' ['^' n]
  ExactPolynomial term(bool negative) {
    Rational coef = 1;
    bool have_coef = false;
    if (peek().kind == Tok::number) {
      coef = unsigned_rational();
      have_coef = true;
      if (at_punct("*")) next();
    }
    int power = 0;
    if (peek().kind == Tok::ident) {
      if (peek().text != "x") fail(peek(), "expected the variable 'x', found '" + peek().text + "'");
      next();
      power = 1;
      if (at_punct("^")) {
        next();
        const Token& at = peek();
        const Integer e = unsigned_integer();
        if (e > 100000) fail(at, "exponent too large");
        power = static_cast<int>(e.get_si());
      }
    } else if (!have_coef) {
      fail(peek(), "expected a polynomial term" + found());
    }
    if (negative) coef = -coef;
    return ExactPolynomial::monomial(coef, power);
  }

  ExactPolynomial polynomial() {
    bool negative = false;
    if (at_punct("-") || at_punct("+")) negative = next().text == "-";
    ExactPolynomial acc = term(negative);
    while (at_punct("+") || at_punct("-")) {
      negative = next().text == "-";
      acc = acc + term(negative);
    }
    return acc;
  }

  bool boolean() {
    const Token& t = peek();
    if (t.kind == Tok::ident && (t.text == "true" || t.text == "false")) {
      next();
      return t.text == "true";
    }
    fail(t, "expected true or false" + found());
  }

  // '{' field ':' value (',' field ':' value)* [','] '}'
  template <typename Handler>
  void object(Handler&& on_field) {
    expect("{");
    std::set<std::string> fields;
    while (!at_punct("}")) {
      const Token& name = expect_ident("a field name");
      if (!fields.insert(name.text).second) fail(name, "duplicate field '" + name.text + "'");
      expect(":");
      on_field(name);
      if (!at_punct(",")) break;
      next();
    }
    expect("}");
  }

  void lag_value(RecurrenceSpec& spec, std::set<int>& depths) {
    const Token& open = peek();
    LagTerm lag;
    std::optional<int> depth;
    const Token* depth_token = nullptr;
    bool have_coeff = false;
    object([&](const Token& name) {
      if (name.text == "s") {
        depth_token = &peek();
        depth = static_cast<int>(small_integer(false));
        if (*depth < 1) fail(*depth_token, "lag depth s must be >= 1");
      } else if (name.text == "coeff") {
        lag.kappa = polynomial();
        have_coeff = true;
      } else if (name.text == "binom") {
        lag.binom_weight = boolean();
      } else {
        fail(name, "unknown lag field '" + name.text + "' (expected s, coeff, binom)");
      }
    });
    if (!depth) fail(open, "lag needs a depth 's'");
    if (!have_coeff) fail(open, "lag needs a 'coeff' polynomial");
    if (!depths.insert(*depth).second) {
      fail(*depth_token, "duplicate lag depth " + std::to_string(*depth));
    }
    lag.depth = *depth;
    spec.lags.push_back(std::move(lag));
    std::sort(spec.lags.begin(), spec.lags.end(),
              [](const LagTerm& a, const LagTerm& b) { return a.depth < b.depth; });
  }

  void start_value(RecurrenceSpec& spec) {
    object([&](const Token& name) {
      if (name.text == "index") {
        spec.start_index = static_cast<int>(small_integer(false));
      } else if (name.text == "poly") {
        const Token& at = peek();
        spec.start_poly = polynomial();
        if (spec.start_poly.is_zero()) fail(at, "start polynomial must be nonzero");
      } else {
        fail(name, "unknown start field '" + name.text + "' (expected index, poly)");
      }
    });
  }

  FamilyRequest family_value() {
    FamilyRequest r;
    r.name = expect_ident("a family name").text;
    if (!at_punct("(")) return r;
    next();
    while (!at_punct(")")) {
      const Token& key = expect_ident("a parameter name");
      if (r.params.count(key.text)) fail(key, "duplicate parameter '" + key.text + "'");
      expect("=");
      r.params[key.text] = small_integer(true);
      if (!at_punct(",")) break;
      next();
    }
    expect(")");
    return r;
  }

  std::string origin_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedSpec parse(const SpecSource& src) {
  Parser p(src.text, src.origin);
  return p.parse_spec();
}

ExactPolynomial parse_polynomial(std::string_view text, const std::string& origin) {
  Parser p(text, origin);
  return p.polynomial_only();
}

FamilyRequest parse_family_request(std::string_view text, const std::string& origin) {
  Parser p(text, origin);
  return p.family_only();
}

std::string format(const RecurrenceSpec& spec) {
  std::string out = "gamma: " + to_string(spec.gamma) + "; m: " + spec.m.get_str() + ";";
  std::vector<LagTerm> lags = spec.lags;
  std::sort(lags.begin(), lags.end(),
            [](const LagTerm& a, const LagTerm& b) { return a.depth < b.depth; });
  for (const auto& lag : lags) {
    out += " lag: {s: " + std::to_string(lag.depth) + ", coeff: " + to_string(lag.kappa) +
           ", binom: " + (lag.binom_weight ? "true" : "false") + "};";
  }
  if (spec.start_index != 0 || spec.start_poly != ExactPolynomial{1}) {
    out += " start: {index: " + std::to_string(spec.start_index) +
           ", poly: " + to_string(spec.start_poly) + "};";
  }
  return out;
}

std::string format(const FamilyRequest& request) {
  std::string out = "family: " + request.name;
  if (!request.params.empty()) {
    out += "(";
    bool first = true;
    for (const auto& [k, v] : request.params) {
      if (!first) out += ", ";
      first = false;
      out += k + "=" + std::to_string(v);
    }
    out += ")";
  }
  return out + ";";
}

RecurrenceSpec resolve_spec(const ParsedSpec& parsed) {
  if (const auto* spec = std::get_if<RecurrenceSpec>(&parsed)) return *spec;
  const auto& req = std::get<FamilyRequest>(parsed);
  return catalog(req.name, req.params).spec;
}

}  // namespace ddrec
