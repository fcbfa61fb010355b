#pragma once

// Data-parallel kernels behind the certificates. Every kernel exists twice:
// maschke::serial is the plain reference loop, maschke::parallel the OpenMP
// version. Both return identical results for identical input; tests compare
// them and bench/ times them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "maschke/geom.hpp"
#include "maschke/matrix.hpp"
#include "maschke/poly.hpp"

namespace maschke {

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

struct DisjointSweep {
  std::uint64_t pairs_checked = 0;
  std::uint64_t meeting_pairs = 0;
  /// Lexicographically smallest (i, j), i < j, of lines that meet.
  std::optional<IndexPair> first_meeting;
};

/// Polynomial with coefficients reduced into F_p.
struct FpPoly {
  std::int64_t prime = 3;
  std::vector<std::pair<Monomial, std::int64_t>> terms;

  static FpPoly reduce(const Poly& p, std::int64_t prime);
  std::int64_t evaluate(const std::array<std::int64_t, 4>& point) const;
};

using FpPoint = std::array<std::int64_t, 4>;

/// f together with its four partial derivatives, all reduced mod p.
struct FpSingularSystem {
  std::int64_t prime = 3;
  std::array<FpPoly, 5> polys;

  static FpSingularSystem from(const Poly& f, std::int64_t prime);
};

struct SingularScan {
  std::int64_t prime = 0;
  std::uint64_t points_scanned = 0;
  /// Singular point with the smallest enumeration index.
  std::optional<FpPoint> first_singular;
};

/// p^3 + p^2 + p + 1.
std::uint64_t projective_point_count(std::int64_t p);
/// The index-th point of P^3(F_p), normalized with leading coordinate 1.
FpPoint projective_point(std::int64_t p, std::uint64_t index);

/// [t^degree] 1 / det(I - t g).
FieldElement molien_term(const MatrixK& g, int degree);

namespace serial {
DisjointSweep disjoint_sweep(std::span<const Line> lines);
std::vector<IndexPair> meeting_pairs(std::span<const Line> lines);
SingularScan singular_scan(const FpSingularSystem& system);
FieldElement molien_sum(std::span<const MatrixK> group, int degree);
}  // namespace serial

namespace parallel {
DisjointSweep disjoint_sweep(std::span<const Line> lines, int workers);
std::vector<IndexPair> meeting_pairs(std::span<const Line> lines, int workers);
SingularScan singular_scan(const FpSingularSystem& system, int workers);
FieldElement molien_sum(std::span<const MatrixK> group, int degree, int workers);
}  // namespace parallel

}  // namespace maschke
