#include "maschke/matrix.hpp"

#include <sstream>

#include "maschke/errors.hpp"

namespace maschke {
namespace {

FieldElement minor2(const MatrixK& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
}

FieldElement minor3(const MatrixK& m, const std::array<std::size_t, 3>& idx) {
  // Principal minor on rows/columns idx, by cofactor expansion along the first row.
  const auto [a, b, c] = idx;
  FieldElement out;
  if (!m(a, a).is_zero()) out += m(a, a) * minor2(m, b, c, b, c);
  if (!m(a, b).is_zero()) out -= m(a, b) * minor2(m, b, c, a, c);
  if (!m(a, c).is_zero()) out += m(a, c) * minor2(m, b, c, a, b);
  return out;
}

}  // namespace

MatrixK MatrixK::identity() { return scalar(FieldElement(1)); }

MatrixK MatrixK::scalar(const FieldElement& c) {
  MatrixK m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = c;
  return m;
}

MatrixK MatrixK::from_rows(const std::array<std::array<std::int64_t, 4>, 4>& rows, const FieldElement& scale) {
  MatrixK m;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (rows[r][c] != 0) m(r, c) = scale * Rational(rows[r][c]);
    }
  }
  return m;
}

bool MatrixK::is_identity() const { return *this == identity(); }

std::size_t MatrixK::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& x : e_) h = (h ^ x.hash()) * 0x100000001b3ULL;
  return h;
}

std::string MatrixK::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < 4; ++r) {
    os << "[";
    for (std::size_t c = 0; c < 4; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

MatrixK operator*(const MatrixK& a, const MatrixK& b) {
  MatrixK out;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k) {
      const FieldElement& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < 4; ++c) {
        const FieldElement& y = b(k, c);
        if (y.is_zero()) continue;
        out(r, c) += x * y;
      }
    }
  }
  return out;
}

Vector4 operator*(const MatrixK& m, const Vector4& v) {
  Vector4 out;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (m(r, c).is_zero() || v[c].is_zero()) continue;
      out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

FieldElement determinant(const MatrixK& m) {
  // Laplace expansion along the top two rows: sum over column pairs of
  // (top minor) * (complementary bottom minor) * sign.
  static constexpr std::array<std::array<std::size_t, 4>, 6> kSplits = {{
      {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}, {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}}};
  static constexpr std::array<int, 6> kSigns = {1, -1, 1, 1, -1, 1};
  FieldElement det;
  for (std::size_t s = 0; s < kSplits.size(); ++s) {
    const auto& [c0, c1, d0, d1] = kSplits[s];
    FieldElement top = minor2(m, 0, 1, c0, c1);
    if (top.is_zero()) continue;
    FieldElement term = top * minor2(m, 2, 3, d0, d1);
    if (kSigns[s] < 0) det -= term; else det += term;
  }
  return det;
}

MatrixK inverse(const MatrixK& m) {
  // Gauss-Jordan on [m | I].
  MatrixK a = m;
  MatrixK inv = MatrixK::identity();
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && a(pivot, col).is_zero()) ++pivot;
    if (pivot == 4) throw SingularMatrix("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < 4; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    FieldElement scale = a(col, col).inverse();
    for (std::size_t c = 0; c < 4; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      FieldElement factor = a(r, col);
      for (std::size_t c = 0; c < 4; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

std::array<FieldElement, 5> reversed_char_poly(const MatrixK& m) {
  FieldElement e1;
  for (std::size_t i = 0; i < 4; ++i) e1 += m(i, i);
  FieldElement e2;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) e2 += minor2(m, i, j, i, j);
  }
  FieldElement e3;
  e3 += minor3(m, {0, 1, 2});
  e3 += minor3(m, {0, 1, 3});
  e3 += minor3(m, {0, 2, 3});
  e3 += minor3(m, {1, 2, 3});
  return {FieldElement(1), -e1, e2, -e3, determinant(m)};
}

}  // namespace maschke
