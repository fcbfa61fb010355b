#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maschke/geom.hpp"
#include "maschke/group.hpp"
#include "maschke/kernels.hpp"
#include "maschke/poly.hpp"
#include "maschke/search.hpp"

namespace maschke {

/// True iff f is fixed by every generator (hence by the generated group).
bool verify_invariance(const Poly& f, const GeneratorSet& gens);

/// Dimension of degree-d invariants, by averaging [t^d] 1/det(I - t g) over
/// the group. Throws NonIntegerResult if the average is not a nonnegative
/// integer, DomainError if d is outside 0..12.
std::int64_t molien_invariant_dimension(const GroupClosure& group, int degree, int workers = 1);

inline constexpr int kMaxMolienDegree = 12;

struct SmoothnessCertificate {
  std::int64_t prime = 0;
  std::uint64_t points_scanned = 0;
  /// A point of P^3(F_p) where f and all partials vanish, if one exists.
  std::optional<FpPoint> singular_witness;
  /// Set when the reduction of f mod p is a diagonal form c0 x^d + ... + c3 t^d
  /// with all ci nonzero and p not dividing d; then its gradient vanishes
  /// only at 0 over every extension of F_p, not just over F_p itself.
  bool diagonal_reduction = false;

  /// The F_p scan found no singular point.
  bool scan_clean() const { return !singular_witness.has_value(); }
  /// Scan clean and the closure argument holds: a characteristic-0 certificate.
  bool conclusive() const { return scan_clean() && diagonal_reduction; }
  std::string argument() const;
};

/// Scans all p^3 + p^2 + p + 1 points of P^3(F_p) for common zeros of f
/// and its partial derivatives. f must be homogeneous of `expected_degree`
/// with rational integer coefficients; throws PreconditionError otherwise
/// and BadPrime if p is not an odd prime.
SmoothnessCertificate smoothness_certificate(const Poly& f, std::int64_t prime, int workers = 1,
                                             int expected_degree = 8);

/// 2d(d - 2), for d >= 3.
std::int64_t miyaoka_bound(std::int64_t degree);
/// d(d - 2) + 2, for d >= 5.
std::int64_t rams_bound(std::int64_t degree);

struct DisjointFamilyCertificate {
  std::size_t lines = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t meeting_pairs = 0;
  std::optional<IndexPair> witness;
  bool passed() const { return !witness.has_value(); }
};

/// Checks every unordered pair. Throws PreconditionError if two entries are
/// equal, since a repeated line trivially meets itself.
DisjointFamilyCertificate verify_disjoint_family(std::span<const Line> lines, int workers = 1);

struct IntersectionGraph {
  std::vector<Line> vertices;
  std::vector<IndexPair> edges;
  Graph graph{0};
};

/// Edge {i, j} for every pair of distinct lines that meet.
IntersectionGraph build_intersection_graph(std::vector<Line> lines, int workers = 1);

/// Canonically sorted line sets used by the certificates and the exporter.
struct LineCatalogue {
  std::vector<Line> orbit160;
  std::vector<Line> orbit192;
  std::vector<Line> family96;
  std::vector<Line> all352;  // orbit160 and orbit192 merged, sorted
};

LineCatalogue build_line_catalogue(const GeneratorSet& g31 = builtin_generators(BuiltinGroup::kG31),
                                   const GeneratorSet& ab = builtin_generators(BuiltinGroup::kAB));

/// Orbit of `seed` under the group generated by gens, sorted canonically.
std::vector<Line> line_orbit(const GeneratorSet& gens, const Line& seed, std::size_t cap = kDefaultOrbitCap);

}  // namespace maschke
