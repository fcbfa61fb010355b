#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "maschke/rational.hpp"

namespace maschke {

// Element of K = Q(i, sqrt3, sqrt5), stored as rational coordinates over the
// basis (1, i, sqrt3, i*sqrt3, sqrt5, i*sqrt5, sqrt15, i*sqrt15).
//
// Basis index k encodes a product of generators: bit 0 is i, bit 1 is sqrt3,
// bit 2 is sqrt5. So e_j * e_k = c(j, k) * e_(j xor k) with c a product of
// -1, 3 and 5 over the shared bits. i, sqrt3 and sqrt5 are formal symbols;
// every identity proved here holds for all choices of square roots.
class FieldElement {
 public:
  static constexpr std::size_t kDim = 8;
  using Coords = std::array<Rational, kDim>;

  enum Basis : std::size_t {
    kOne = 0,
    kI = 1,
    kSqrt3 = 2,
    kISqrt3 = 3,
    kSqrt5 = 4,
    kISqrt5 = 5,
    kSqrt15 = 6,
    kISqrt15 = 7,
  };

  FieldElement() = default;
  FieldElement(const Rational& r) { coords_[kOne] = r; }  // NOLINT(google-explicit-constructor)
  FieldElement(std::int64_t n) { coords_[kOne] = Rational(n); }  // NOLINT(google-explicit-constructor)
  explicit FieldElement(Coords coords) : coords_(std::move(coords)) {}

  static FieldElement basis(std::size_t k, const Rational& scale = Rational(1));
  static FieldElement i() { return basis(kI); }
  static FieldElement sqrt3() { return basis(kSqrt3); }
  static FieldElement sqrt5() { return basis(kSqrt5); }

  const Rational& operator[](std::size_t k) const { return coords_[k]; }
  const Coords& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when every coordinate except the rational one vanishes.
  bool is_rational() const;

  /// Field automorphism negating the generators selected by `mask`
  /// (bit 0: i, bit 1: sqrt3, bit 2: sqrt5).
  FieldElement galois(unsigned mask) const;

  /// Multiplicative inverse; throws DivisionByZero on zero.
  FieldElement inverse() const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& r);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) = default;
  /// Lexicographic on coordinates; used only for deterministic ordering.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  Coords coords_{};
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Element of the prime field F_p, p odd.
struct FpElement {
  std::int64_t value = 0;
  std::int64_t modulus = 3;

  friend bool operator==(const FpElement&, const FpElement&) = default;
};

/// Reduces a rational element of K modulo p. Throws NonRational if any
/// irrational coordinate is nonzero, BadPrime if p is not an odd prime or
/// divides the denominator.
FpElement reduce_mod_p(const FieldElement& a, std::int64_t p);

bool is_odd_prime(std::int64_t p);

}  // namespace maschke

template <>
struct std::hash<maschke::FieldElement> {
  std::size_t operator()(const maschke::FieldElement& x) const noexcept { return x.hash(); }
};
