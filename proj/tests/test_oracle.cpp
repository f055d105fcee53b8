#include <doctest.h>

#include <vector>

#include "ddrec/error.hpp"
#include "ddrec/oracle.hpp"

using namespace ddrec;

namespace {

// Second, deliberately naive enumerator: builds every set partition of
// [r + n] as explicit block lists, then filters and weighs it.
std::map<int, Integer> naive_counts(const PartitionConstraint& c) {
  const int total = c.r + c.n;
  std::map<int, Integer> out;
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int e) -> void {
    if (e == total) {
      int k = 0;
      Integer weight = 1;
      for (const auto& b : blocks) {
        int dist = 0;
        for (int v : b) dist += v < c.r;
        if (dist > 1) return;
        if (dist == 1) continue;
        if (static_cast<int>(b.size()) < c.s) return;
        ++k;
        for (std::size_t i = 1; i < b.size(); ++i) weight *= c.m;
      }
      out[k] += weight;
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(e);
      self(self, e + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({e});
    self(self, e + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Integer total(const std::map<int, Integer>& m) {
  Integer t = 0;
  for (const auto& [k, v] : m) t += v;
  return t;
}

}  // namespace

TEST_CASE("count_partitions examples") {
  CHECK(count_partitions({4, 0, 1, 1}) == std::map<int, Integer>{{1, 1}, {2, 7}, {3, 6}, {4, 1}});
  CHECK(count_partitions({4, 0, 1, 2}) == std::map<int, Integer>{{1, 1}, {2, 3}});
  const auto w = count_partitions({2, 0, 2, 1});
  CHECK(w == std::map<int, Integer>{{1, 2}, {2, 1}});
  CHECK(total(w) == 3);
  const auto row = triangle(catalog("whitney", {{"m", 2}, {"c", 0}}).spec, 2)[2];
  for (const auto& [k, v] : w) CHECK(row.coeffs[static_cast<std::size_t>(k)] == v);
  CHECK(count_partitions({0, 0, 1, 1}) == std::map<int, Integer>{{0, 1}});
  CHECK(count_partitions({1, 0, 1, 2}).empty());
}

TEST_CASE("Bell and Dowling totals") {
  // B_0..B_10 and the m = 2 Dowling numbers.
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  const long dowling2[] = {1, 2, 6, 24, 116, 648, 4088, 28640, 219920, 1832224, 16430176};
  for (int n = 0; n <= 10; ++n) {
    CHECK(total(count_partitions({n, 0, 1, 1})) == bell[n]);
    CHECK(total(count_partitions({n, 1, 2, 1})) == dowling2[n]);
  }
}

TEST_CASE("property: enumerator agrees with naive block-list enumeration") {
  for (int r = 0; r <= 2; ++r) {
    for (int m = 1; m <= 3; ++m) {
      for (int s = 1; s <= 3; ++s) {
        for (int n = 0; n + r <= 8; ++n) {
          const PartitionConstraint c{n, r, m, s};
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(m);
          CAPTURE(s);
          CHECK(count_partitions(c) == naive_counts(c));
        }
      }
    }
  }
}

TEST_CASE("weight-1 specialization counts plain partitions") {
  for (int n = 0; n <= 7; ++n) {
    const auto plain = naive_counts({n, 0, 1, 1});
    CHECK(count_partitions({n, 0, 1, 1}) == plain);
  }
}

TEST_CASE("guards") {
  try {
    count_partitions({13, 2, 1, 1});
    FAIL("expected size_guard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size_guard);
  }
  CHECK_THROWS_AS(count_partitions({-1, 0, 1, 1}), Error);
  CHECK_THROWS_AS(count_partitions({3, 0, 0, 1}), Error);
  CHECK_THROWS_AS(count_partitions({3, 0, 1, 0}), Error);
}

TEST_CASE("verify_family") {
  CHECK(verify_family(catalog("stirling2"), 8).status == OracleReport::Status::passed);
  const auto rwa = verify_family(catalog("r_whitney_assoc", {{"m", 2}, {"r", 1}, {"s", 2}}), 7);
  CHECK(rwa.status == OracleReport::Status::passed);
  CHECK(rwa.max_n_checked == 7);

  const auto galton = verify_family(catalog("galton", {{"m", 2}, {"c", -1}}), 8);
  CHECK(galton.status == OracleReport::Status::skipped);
  CHECK_FALSE(galton.notice.empty());

  const auto clamped = verify_family(catalog("r_stirling", {{"r", 3}}), 20);
  CHECK(clamped.status == OracleReport::Status::passed);
  CHECK(clamped.max_n_checked == kOracleMaxElements - 3);

  for (const auto& fam : default_catalog()) {
    CAPTURE(fam.display_name());
    CHECK(verify_family(fam, 7).status != OracleReport::Status::mismatch);
  }

  auto broken = catalog("dowling", {{"m", 2}});
  broken.spec.gamma = ExactPolynomial{2, 1};
  const auto bad = verify_family(broken, 5);
  CHECK(bad.status == OracleReport::Status::mismatch);
  REQUIRE(bad.first_mismatch);
  CHECK(bad.first_mismatch->first == 1);
}

TEST_CASE("combinatorial models") {
  CHECK_FALSE(combinatorial_model(catalog("sheffer")).has_value());
  CHECK_FALSE(combinatorial_model(catalog("galton")).has_value());
  const auto rs = combinatorial_model(catalog("r_stirling", {{"r", 2}}));
  REQUIRE(rs);
  CHECK(rs->r == 2);
  CHECK(rs->offset == 2);
  const auto w = combinatorial_model(catalog("whitney", {{"m", 3}, {"c", -1}}));
  CHECK_FALSE(w.has_value());
}
