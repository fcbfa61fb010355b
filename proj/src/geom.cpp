#include "maschke/geom.hpp"

#include <sstream>

#include "maschke/errors.hpp"

namespace maschke {
namespace {

// In-place reduced row echelon form of two rows; returns the pivot columns
// found (at most two, in increasing order).
std::vector<std::size_t> rref2(std::array<Vector4, 2>& rows) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4 && r < 2; ++col) {
    std::size_t pick = r;
    while (pick < 2 && rows[pick][col].is_zero()) ++pick;
    if (pick == 2) continue;
    if (pick != r) std::swap(rows[pick], rows[r]);
    if (!rows[r][col].is_one()) {
      FieldElement scale = rows[r][col].inverse();
      for (auto& x : rows[r]) {
        if (!x.is_zero()) x *= scale;
      }
    }
    for (std::size_t other = 0; other < 2; ++other) {
      if (other == r || rows[other][col].is_zero()) continue;
      FieldElement factor = rows[other][col];
      for (std::size_t c = 0; c < 4; ++c) {
        if (!rows[r][c].is_zero()) rows[other][c] -= factor * rows[r][c];
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

constexpr std::array<std::array<std::size_t, 2>, 6> kColumnPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

PointP3::PointP3(const Vector4& v) : coords_(v) {
  std::size_t lead = 0;
  while (lead < 4 && coords_[lead].is_zero()) ++lead;
  if (lead == 4) throw DomainError("the zero vector is not a projective point");
  if (!coords_[lead].is_one()) {
    FieldElement scale = coords_[lead].inverse();
    for (auto& x : coords_) x *= scale;
  }
}

Line Line::from_span(const Vector4& r0, const Vector4& r1) {
  Line line;
  line.span_ = {r0, r1};
  if (rref2(line.span_).size() != 2) throw DegenerateSpan("spanning rows are linearly dependent");
  return line;
}

std::array<std::size_t, 2> Line::pivots() const {
  std::array<std::size_t, 2> p{};
  for (std::size_t r = 0; r < 2; ++r) {
    std::size_t c = 0;
    while (span_[r][c].is_zero()) ++c;
    p[r] = c;
  }
  return p;
}

bool Line::contains(const Vector4& v) const {
  // In RREF, v lies in the row space iff v = v[p0] row0 + v[p1] row1.
  auto [p0, p1] = pivots();
  for (std::size_t c = 0; c < 4; ++c) {
    if (v[c] != v[p0] * span_[0][c] + v[p1] * span_[1][c]) return false;
  }
  return true;
}

std::size_t Line::hash() const noexcept {
  std::size_t h = 0x6a09e667f3bcc909ULL;
  for (const auto& row : span_) {
    for (const auto& x : row) h = (h ^ x.hash()) * 0x100000001b3ULL;
  }
  return h;
}

std::string Line::to_string() const {
  std::ostringstream os;
  for (const auto& row : span_) {
    os << "(";
    for (std::size_t c = 0; c < 4; ++c) os << (c ? ", " : "") << row[c];
    os << ")";
  }
  return os.str();
}

std::strong_ordering operator<=>(const Line& a, const Line& b) {
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      auto cmp = a.span_[r][c] <=> b.span_[r][c];
      if (cmp != 0) return cmp;
    }
  }
  return std::strong_ordering::equal;
}

Line line_from_forms(const Vector4& form1, const Vector4& form2) {
  std::array<Vector4, 2> forms{form1, form2};
  auto pivots = rref2(forms);
  if (pivots.size() != 2) throw DependentForms("linear forms are proportional");
  std::array<Vector4, 2> kernel;
  std::size_t k = 0;
  for (std::size_t free = 0; free < 4; ++free) {
    if (free == pivots[0] || free == pivots[1]) continue;
    Vector4& v = kernel[k++];
    v[free] = FieldElement(1);
    v[pivots[0]] = -forms[0][free];
    v[pivots[1]] = -forms[1][free];
  }
  return Line::from_span(kernel[0], kernel[1]);
}

Line act(const MatrixK& g, const Line& line) { return Line::from_span(g * line.row(0), g * line.row(1)); }

std::array<FieldElement, 6> row_pair_minors(const Line& line) {
  std::array<FieldElement, 6> minors;
  const auto& r0 = line.row(0);
  const auto& r1 = line.row(1);
  for (std::size_t k = 0; k < kColumnPairs.size(); ++k) {
    auto [i, j] = kColumnPairs[k];
    minors[k] = r0[i] * r1[j] - r0[j] * r1[i];
  }
  return minors;
}

FieldElement meet_determinant(const std::array<FieldElement, 6>& a, const std::array<FieldElement, 6>& b) {
  // Laplace expansion along the first line's rows; pair k is complementary to 5 - k.
  static constexpr std::array<int, 6> kSigns = {1, -1, 1, 1, -1, 1};
  FieldElement det;
  for (std::size_t k = 0; k < 6; ++k) {
    if (a[k].is_zero() || b[5 - k].is_zero()) continue;
    FieldElement term = a[k] * b[5 - k];
    if (kSigns[k] < 0) det -= term; else det += term;
  }
  return det;
}

bool lines_disjoint(const Line& a, const Line& b) {
  return !meet_determinant(row_pair_minors(a), row_pair_minors(b)).is_zero();
}

bool line_on_surface(const Line& line, const Poly& f) {
  return restrict_to_line(f, line.row(0), line.row(1), f.is_zero() ? 0 : f.degree()).is_zero();
}

Line line_l160() {
  const FieldElement c = (FieldElement::i() + FieldElement(1)) * (FieldElement::sqrt3() + FieldElement(1));
  return line_from_forms({FieldElement(2), c, FieldElement(), FieldElement()},
                         {FieldElement(), FieldElement(), FieldElement(2), c});
}

Line line_l192() {
  const FieldElement root5_plus_1 = FieldElement::sqrt5() + FieldElement(1);
  const FieldElement d = (FieldElement::i() + FieldElement(1)) * root5_plus_1;
  const FieldElement e = (FieldElement::i() - FieldElement(1)) * root5_plus_1;
  return line_from_forms({d, FieldElement(-2), FieldElement(-2), FieldElement()},
                         {FieldElement(), FieldElement(2), FieldElement(-2), e});
}

}  // namespace maschke
