#include <set>

#include "doctest.h"
#include "maschke/certify.hpp"
#include "maschke/kernels.hpp"
#include "test_support.hpp"

using namespace maschke;
using maschke::testing::ab_generators;

namespace {

const std::vector<Line>& all_lines() {
  static const std::vector<Line> lines = build_line_catalogue().all352;
  return lines;
}

}  // namespace

TEST_CASE("projective point enumeration covers P3(F_p) once") {
  for (std::int64_t p : {3, 5, 7}) {
    std::uint64_t n = projective_point_count(p);
    CHECK(n == static_cast<std::uint64_t>(p * p * p + p * p + p + 1));
    std::set<FpPoint> seen;
    for (std::uint64_t k = 0; k < n; ++k) {
      FpPoint pt = projective_point(p, k);
      std::size_t lead = 0;
      while (lead < 4 && pt[lead] == 0) ++lead;
      REQUIRE(lead < 4);
      CHECK(pt[lead] == 1);
      for (auto c : pt) CHECK((c >= 0 && c < p));
      seen.insert(pt);
    }
    CHECK(seen.size() == n);
  }
}

TEST_CASE("molien_term of the identity is a binomial coefficient") {
  // 1/(1-t)^4 = sum C(d+3, 3) t^d
  for (int d = 0; d <= 8; ++d) {
    std::int64_t binom = static_cast<std::int64_t>(d + 3) * (d + 2) * (d + 1) / 6;
    CHECK(molien_term(MatrixK::identity(), d) == FieldElement(binom));
  }
  // 1/(1+t)^4 alternates in sign.
  CHECK(molien_term(MatrixK::scalar(FieldElement(-1)), 1) == FieldElement(-4));
}

TEST_CASE("disjoint sweep agrees with a direct pairwise loop") {
  const auto& lines = all_lines();
  std::uint64_t meets = 0;
  std::optional<IndexPair> first;
  for (std::uint32_t i = 0; i < lines.size(); ++i) {
    for (std::uint32_t j = i + 1; j < lines.size(); ++j) {
      if (!lines_disjoint(lines[i], lines[j])) {
        ++meets;
        if (!first) first = IndexPair{i, j};
      }
    }
  }
  DisjointSweep s = serial::disjoint_sweep(lines);
  CHECK(s.pairs_checked == 352ull * 351 / 2);
  CHECK(s.meeting_pairs == meets);
  CHECK(s.first_meeting == first);
  for (int workers : {1, 2, 4}) {
    DisjointSweep p = parallel::disjoint_sweep(lines, workers);
    CHECK(p.pairs_checked == s.pairs_checked);
    CHECK(p.meeting_pairs == s.meeting_pairs);
    CHECK(p.first_meeting == s.first_meeting);
  }
}

TEST_CASE("meeting pairs are identical in serial and parallel") {
  const auto& lines = all_lines();
  auto s = serial::meeting_pairs(lines);
  CHECK(s.size() == serial::disjoint_sweep(lines).meeting_pairs);
  for (int workers : {1, 3}) CHECK(parallel::meeting_pairs(lines, workers) == s);
}

TEST_CASE("singular scans are identical in serial and parallel") {
  Poly f = build_maschke_f();
  for (std::int64_t p : {5, 7, 11}) {
    auto system = FpSingularSystem::from(f, p);
    SingularScan s = serial::singular_scan(system);
    CHECK(s.points_scanned == projective_point_count(p));
    for (int workers : {1, 2, 4}) {
      SingularScan q = parallel::singular_scan(system, workers);
      CHECK(q.points_scanned == s.points_scanned);
      CHECK(q.first_singular == s.first_singular);
    }
  }
}

TEST_CASE("a reported singular point really is singular") {
  Poly f = build_maschke_f();
  auto system = FpSingularSystem::from(f, 5);
  SingularScan s = serial::singular_scan(system);
  REQUIRE(s.first_singular.has_value());
  for (const auto& poly : system.polys) CHECK(poly.evaluate(*s.first_singular) == 0);
}

TEST_CASE("molien sums are identical in serial and parallel") {
  GroupClosure g = closure(ab_generators());
  for (int d : {1, 4, 8}) {
    FieldElement s = serial::molien_sum(g.elements(), d);
    for (int workers : {1, 2, 4}) CHECK(parallel::molien_sum(g.elements(), d, workers) == s);
  }
}
