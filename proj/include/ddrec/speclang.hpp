#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "ddrec/families.hpp"
#include "ddrec/recurrence.hpp"

namespace ddrec {

/// Recurrence text, e.g.
///
///     gamma: x + 1; m: 2;
///     lag: {s: 2, coeff: 3x, binom: true};
///     start: {index: 0, poly: 1};
///
/// or a catalog invocation `family: dowling(m=2);`. `#` starts a comment that
/// runs to the end of the line.
struct SpecSource {
  std::string text;
  std::string origin = "<inline>";
};

struct FamilyRequest {
  std::string name;
  std::map<std::string, long> params;

  friend bool operator==(const FamilyRequest&, const FamilyRequest&) = default;
};

using ParsedSpec = std::variant<RecurrenceSpec, FamilyRequest>;

/// Throws ParseError with the line and column of the offending token.
ParsedSpec parse(const SpecSource& src);

/// A polynomial literal on its own: "3x^2 - 1/2 x + 1".
ExactPolynomial parse_polynomial(std::string_view text, const std::string& origin = "<inline>");

/// The family value alone: "dowling(m=2)" or "stirling2".
FamilyRequest parse_family_request(std::string_view text,
                                   const std::string& origin = "<inline>");

/// Canonical text: gamma, m, lags sorted by depth, then start when it differs
/// from the default (index 0, polynomial 1).
std::string format(const RecurrenceSpec& spec);
std::string format(const FamilyRequest& request);

/// The spec a parse result stands for; family requests go through the catalog.
RecurrenceSpec resolve_spec(const ParsedSpec& parsed);

}  // namespace ddrec
