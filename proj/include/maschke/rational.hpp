#pragma once

#include <compare>
#include <cstdint>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maschke {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator both fit in an int64 (excluding
// INT64_MIN) are stored inline; anything larger is promoted to a heap
// mpq_class. The representation is canonical: a value is stored big if and
// only if it does not fit the small form, so equality and hashing can work
// on the representation directly.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(std::int64_t n) noexcept;  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational();

  /// Parses "n", "n/d" or "-n/d"; the result is normalized.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return den_ != 0 && num_ == 0; }
  bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const noexcept { return den_ != 0; }

  mpq_class to_mpq() const;
  std::string numerator_string() const;
  std::string denominator_string() const;
  /// Canonical "num/den" form, denominator always present.
  std::string to_string() const;

  std::size_t hash() const noexcept;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Reduces modulo an odd prime p; throws BadPrime if p divides the denominator.
  std::int64_t mod(std::int64_t p) const;

 private:
  struct BigTag {};
  Rational(BigTag, mpq_class* big) noexcept : big_(big), den_(0) {}
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class&& q);

  // den_ == 0 marks the promoted representation.
  union {
    std::int64_t num_;
    mpq_class* big_;
  };
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace maschke

template <>
struct std::hash<maschke::Rational> {
  std::size_t operator()(const maschke::Rational& r) const noexcept { return r.hash(); }
};
