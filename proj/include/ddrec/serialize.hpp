#pragma once

#include <span>
#include <string>

#include "ddrec/asymptotics.hpp"
#include "ddrec/distribution.hpp"
#include "ddrec/families.hpp"
#include "ddrec/recurrence.hpp"

namespace ddrec::cli {

enum class Format { csv, json };

/// Throws Error(invalid_argument) for anything but "csv" / "json".
Format parse_format(const std::string& name);

/// Reals rendered with 12 significant digits.
std::string format_real(double v);

// Exact values are strings ("p/q" or decimal integers) in both formats. CSV
// output always starts with a header row; rows are ordered by n, columns by k.
std::string serialize_triangle(std::span<const TriangleRow> rows, Format format);
std::string serialize_pmf(std::span<const PMFTable> tables, Format format);
std::string serialize_moments(std::span<const PMFTable> tables, Format format);
std::string serialize_normality(std::span<const NormalityReport> reports, Format format);
std::string serialize_asymptotics(std::span<const ExactComparison> rows, Format format);
std::string serialize_families(std::span<const FamilyDescriptor> families, Format format);

}  // namespace ddrec::cli
