#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>

#include "maschke/matrix.hpp"
#include "maschke/poly.hpp"

namespace maschke {

/// Projective point, scaled so its first nonzero coordinate is 1.
class PointP3 {
 public:
  /// Throws DomainError on the zero vector.
  explicit PointP3(const Vector4& v);
  const Vector4& coords() const { return coords_; }
  friend bool operator==(const PointP3&, const PointP3&) = default;

 private:
  Vector4 coords_;
};

// Line in P^3, stored as the reduced row echelon basis of its 2-plane in K^4.
// The RREF is unique per plane, so equality, ordering and hashing act on the
// stored entries.
class Line {
 public:
  using Span = std::array<Vector4, 2>;

  /// Canonicalizes an arbitrary spanning pair; throws DegenerateSpan if the
  /// rows do not have rank 2.
  static Line from_span(const Vector4& r0, const Vector4& r1);

  const Span& span() const { return span_; }
  const Vector4& row(std::size_t r) const { return span_[r]; }
  /// Pivot columns of the two RREF rows.
  std::array<std::size_t, 2> pivots() const;
  bool contains(const Vector4& v) const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Line&, const Line&) = default;
  friend std::strong_ordering operator<=>(const Line& a, const Line& b);

 private:
  Line() = default;
  Span span_;
};

/// The common zero set of two independent linear forms (coefficients of
/// x, y, z, t). Throws DependentForms if the forms are proportional.
Line line_from_forms(const Vector4& form1, const Vector4& form2);

/// g . L, the image of the plane under the column-vector action of g.
Line act(const MatrixK& g, const Line& line);

/// True iff the lines do not meet in P^3.
bool lines_disjoint(const Line& a, const Line& b);

/// True iff f vanishes identically on the line.
bool line_on_surface(const Line& line, const Poly& f);

/// 2x2 minors of a line's spanning rows, in the column-pair order
/// (01, 02, 03, 12, 13, 23). Two lines meet iff sum of +/- products of
/// complementary minors vanishes; see meet_determinant.
std::array<FieldElement, 6> row_pair_minors(const Line& line);

/// det of the 4x4 matrix stacking both spans, from precomputed minors.
FieldElement meet_determinant(const std::array<FieldElement, 6>& a, const std::array<FieldElement, 6>& b);

// The two lines whose orbits make up the 352 lines on the octic.
Line line_l160();
Line line_l192();

}  // namespace maschke

template <>
struct std::hash<maschke::Line> {
  std::size_t operator()(const maschke::Line& l) const noexcept { return l.hash(); }
};
