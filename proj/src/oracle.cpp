#include "ddrec/oracle.hpp"

#include <cstdint>
#include <vector>

#include "ddrec/error.hpp"

namespace ddrec {

namespace {

// Restricted-growth enumeration. Element i either joins one of the existing
// blocks or opens a new non-distinguished block. Colors are never
// materialized: a partition's weight is m^e with e = sum over
// non-distinguished blocks of (size - 1), so leaves are tallied by (k, e).
class Enumerator {
 public:
  explicit Enumerator(const PartitionConstraint& c)
      : c_(c), tally_(static_cast<std::size_t>(c.n + 1),
                      std::vector<std::uint64_t>(static_cast<std::size_t>(c.n + 1), 0)) {}

  void run() { place(0, 0, 0); }

  const std::vector<std::vector<std::uint64_t>>& tally() const { return tally_; }

 private:
  // `free` counts elements placed in non-distinguished blocks.
  void place(int placed, int free, int deficit) {
    const int remaining = c_.n - placed;
    if (deficit > remaining) return;
    if (remaining == 0) {
      const int k = static_cast<int>(sizes_.size());
      ++tally_[k][free - k];
      return;
    }
    // Distinguished blocks; each choice is a distinct partition.
    for (int b = 0; b < c_.r; ++b) place(placed + 1, free, deficit);
    // Indexed: the recursion below pushes onto sizes_.
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      const int before = sizes_[i] < c_.s ? 1 : 0;
      ++sizes_[i];
      const int after = sizes_[i] < c_.s ? 1 : 0;
      place(placed + 1, free + 1, deficit - before + after);
      --sizes_[i];
    }
    sizes_.push_back(1);
    place(placed + 1, free + 1, deficit + (c_.s > 1 ? 1 : 0));
    sizes_.pop_back();
  }

  PartitionConstraint c_;
  std::vector<int> sizes_;
  std::vector<std::vector<std::uint64_t>> tally_;
};

}  // namespace

std::map<int, Integer> count_partitions(const PartitionConstraint& c) {
  if (c.n < 0 || c.r < 0 || c.m < 1 || c.s < 1) {
    throw Error(ErrorKind::invalid_argument,
                "partition constraint needs n >= 0, r >= 0, m >= 1, s >= 1");
  }
  if (c.n + c.r > kOracleMaxElements) {
    throw Error(ErrorKind::size_guard,
                "enumeration limited to r + n <= " + std::to_string(kOracleMaxElements));
  }
  Enumerator e(c);
  e.run();
  std::map<int, Integer> out;
  for (int k = 0; k <= c.n; ++k) {
    Integer total = 0;
    Integer weight = 1;
    for (int colored = 0; colored <= c.n; ++colored) {
      const std::uint64_t count = e.tally()[k][colored];
      if (count != 0) total += weight * Integer(std::to_string(count));
      weight *= c.m;
    }
    if (total != 0) out[k] = total;
  }
  return out;
}

std::optional<CombinatorialModel> combinatorial_model(const FamilyDescriptor& family) {
  const std::string& name = family.name;
  auto narrow = [](long v) { return static_cast<int>(v); };
  if (name == "stirling2") return CombinatorialModel{0, 1, 1, 0};
  if (name == "whitney" || name == "type_b") {
    const long c = family.parameter("c");
    if (c < 0) return std::nullopt;
    return CombinatorialModel{narrow(c), narrow(family.parameter("m")), 1, 0};
  }
  if (name == "translated_whitney") {
    return CombinatorialModel{0, narrow(family.parameter("m")), 1, 0};
  }
  if (name == "dowling") return CombinatorialModel{1, narrow(family.parameter("m")), 1, 0};
  if (name == "stirling_frobenius") {
    const long m = family.parameter("m");
    return CombinatorialModel{narrow(m - 1), narrow(m), 1, 0};
  }
  if (name == "r_stirling") {
    const int r = narrow(family.parameter("r"));
    return CombinatorialModel{r, 1, 1, r};
  }
  if (name == "assoc_stirling") {
    return CombinatorialModel{0, 1, narrow(family.parameter("s")), 0};
  }
  if (name == "r_whitney_assoc") {
    return CombinatorialModel{narrow(family.parameter("r")), narrow(family.parameter("m")),
                              narrow(family.parameter("s")), 0};
  }
  return std::nullopt;
}

OracleReport verify_family(const FamilyDescriptor& family, int n_max) {
  OracleReport report;
  const auto model = combinatorial_model(family);
  if (!model) {
    report.notice = "no combinatorial model registered for " + family.display_name();
    return report;
  }
  int top = n_max;
  if (model->r + top > kOracleMaxElements) {
    top = kOracleMaxElements - model->r;
    report.notice = "n clamped to " + std::to_string(top) + " by the enumeration size guard";
  }
  if (top < 0) {
    report.notice = "distinguished elements exceed the enumeration size guard";
    return report;
  }
  const auto polys = generate(family.spec, model->offset + top);
  const int base = family.spec.start_index;
  report.status = OracleReport::Status::passed;
  for (int n = 0; n <= top; ++n) {
    const auto counts = count_partitions({n, model->r, model->m, model->s});
    std::vector<Rational> expected;
    for (const auto& [k, v] : counts) {
      const auto slot = static_cast<std::size_t>(model->offset + k);
      if (expected.size() <= slot) expected.resize(slot + 1);
      expected[slot] = Rational(v);
    }
    const ExactPolynomial want(std::move(expected));
    const int index = model->offset + n;
    const ExactPolynomial& got = index >= base
                                     ? polys.at(static_cast<std::size_t>(index - base))
                                     : ExactPolynomial{};
    if (got != want) {
      int k = 0;
      while (k <= std::max(got.degree(), want.degree()) && got[k] == want[k]) ++k;
      report.status = OracleReport::Status::mismatch;
      report.first_mismatch = {index, k};
      break;
    }
    report.max_n_checked = n;
  }
  return report;
}

}  // namespace ddrec
