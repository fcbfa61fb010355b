#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "maschke/field.hpp"

namespace maschke {

class MatrixK;

/// Exponent vector for x, y, z, t.
struct Monomial {
  std::array<int, 4> exps{};

  int degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using Vector4 = std::array<FieldElement, 4>;

/// Coefficients of a binary form: coeffs[k] multiplies s^k t^(deg - k).
struct BinaryForm {
  std::vector<FieldElement> coeffs;

  bool is_zero() const;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

// Sparse polynomial in x, y, z, t over K. Zero coefficients are never stored.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  static Poly monomial(const Monomial& m, const FieldElement& c = FieldElement(1));
  /// The coordinate function x_var (var in 0..3).
  static Poly variable(int var);

  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Coefficient of m (zero if absent).
  FieldElement coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const FieldElement& c);

  FieldElement evaluate(const Vector4& v) const;
  std::string to_string() const;

  Poly& operator+=(const Poly& rhs);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const FieldElement& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  void recompute_degree();

  std::map<Monomial, FieldElement> terms_;
  int degree_ = kZeroDegree;
};

/// Sum of the distinct monomials in the orbit of m under permutations of
/// the variables, each with coefficient 1.
Poly sigma4(const Monomial& m);

/// x^8 + ... + 14 (x^4 y^4 + ...) + 168 x^2 y^2 z^2 t^2.
Poly build_maschke_f();

/// q with q(v) = p(M v).
Poly compose_linear(const Poly& p, const MatrixK& m);

Poly partial_derivative(const Poly& p, int var);

/// Coefficients of p(s a + t b). p must be zero or homogeneous of `degree`;
/// throws DegenerateSpan if a and b are proportional.
BinaryForm restrict_to_line(const Poly& p, const Vector4& a, const Vector4& b, int degree = 8);

}  // namespace maschke
