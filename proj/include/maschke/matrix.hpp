#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>

#include "maschke/field.hpp"
#include "maschke/poly.hpp"

namespace maschke {

/// 4x4 matrix over K, row-major.
class MatrixK {
 public:
  MatrixK() = default;
  explicit MatrixK(std::array<FieldElement, 16> entries) : e_(std::move(entries)) {}

  static MatrixK identity();
  static MatrixK scalar(const FieldElement& c);
  /// Row-major from 16 rational entries, scaled by `scale`.
  static MatrixK from_rows(const std::array<std::array<std::int64_t, 4>, 4>& rows,
                           const FieldElement& scale = FieldElement(1));

  const FieldElement& operator()(std::size_t r, std::size_t c) const { return e_[4 * r + c]; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return e_[4 * r + c]; }
  const std::array<FieldElement, 16>& entries() const { return e_; }

  bool is_identity() const;
  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const MatrixK&, const MatrixK&) = default;

 private:
  std::array<FieldElement, 16> e_{};
};

MatrixK operator*(const MatrixK& a, const MatrixK& b);
/// M v, v a column vector.
Vector4 operator*(const MatrixK& m, const Vector4& v);

FieldElement determinant(const MatrixK& m);

/// Exact inverse; throws SingularMatrix when det = 0.
MatrixK inverse(const MatrixK& m);

/// Coefficients c0..c4 of det(I - t M) = c0 + c1 t + ... + c4 t^4.
std::array<FieldElement, 5> reversed_char_poly(const MatrixK& m);

}  // namespace maschke

template <>
struct std::hash<maschke::MatrixK> {
  std::size_t operator()(const maschke::MatrixK& m) const noexcept { return m.hash(); }
};
