#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ddrec/algebra/rational.hpp"
#include "ddrec/families.hpp"

namespace ddrec {

/// Set partitions of [r + n] in which the r distinguished elements sit in
/// distinct blocks, every non-distinguished block has at least s elements,
/// and a non-distinguished block B carries weight m^{|B|-1} (its elements
/// other than the smallest take one of m colors).
struct PartitionConstraint {
  int n = 0;
  int r = 0;
  int m = 1;
  int s = 1;
};

/// Largest r + n the enumerator accepts.
inline constexpr int kOracleMaxElements = 14;

/// Weighted counts keyed by the number of non-distinguished blocks. Keys with
/// a zero count are omitted. Exhaustive; throws Error(size_guard) when
/// r + n > kOracleMaxElements and Error(invalid_argument) for bad fields.
std::map<int, Integer> count_partitions(const PartitionConstraint& c);

/// How a catalog family maps onto the enumerator: rows are indexed by n
/// non-distinguished elements, and row n of the oracle lands on P_{offset+n}
/// shifted up by `offset` powers of x.
struct CombinatorialModel {
  int r = 0;
  int m = 1;
  int s = 1;
  int offset = 0;
};

std::optional<CombinatorialModel> combinatorial_model(const FamilyDescriptor& family);

struct OracleReport {
  enum class Status { passed, mismatch, skipped };
  Status status = Status::skipped;
  /// Rows compared, 0..max_n_checked.
  int max_n_checked = -1;
  std::optional<std::pair<int, int>> first_mismatch;
  std::string notice;
};

/// Exact comparison of the family's triangle with the enumerator for all
/// n <= n_max (clamped to the size guard). Families without a model are
/// skipped with a notice.
OracleReport verify_family(const FamilyDescriptor& family, int n_max);

}  // namespace ddrec
