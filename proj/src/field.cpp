#include "maschke/field.hpp"

#include <bit>
#include <ostream>
#include <sstream>

#include "maschke/errors.hpp"

namespace maschke {
namespace {

constexpr std::array<const char*, FieldElement::kDim> kBasisNames = {
    "", "i", "sqrt3", "i*sqrt3", "sqrt5", "i*sqrt5", "sqrt15", "i*sqrt15"};

// Structure constants: e_j * e_k = kProductScale[j & k] * e_(j ^ k).
constexpr std::array<std::int64_t, 8> kProductScale = [] {
  std::array<std::int64_t, 8> scale{};
  for (unsigned shared = 0; shared < 8; ++shared) {
    std::int64_t c = 1;
    if (shared & 1u) c *= -1;
    if (shared & 2u) c *= 3;
    if (shared & 4u) c *= 5;
    scale[shared] = c;
  }
  return scale;
}();

}  // namespace

FieldElement FieldElement::basis(std::size_t k, const Rational& scale) {
  FieldElement x;
  x.coords_[k] = scale;
  return x;
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool FieldElement::is_one() const { return coords_[kOne].is_one() && is_rational(); }

bool FieldElement::is_rational() const {
  for (std::size_t k = 1; k < kDim; ++k) {
    if (!coords_[k].is_zero()) return false;
  }
  return true;
}

FieldElement FieldElement::galois(unsigned mask) const {
  FieldElement out(*this);
  for (unsigned k = 0; k < kDim; ++k) {
    if (std::popcount(k & mask) % 2 == 1 && !out.coords_[k].is_zero()) out.coords_[k] = -out.coords_[k];
  }
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Multiply by conjugates one generator at a time until the product is
  // rational: a * s5(a) lies in Q(i, sqrt3), and so on down the tower.
  FieldElement by_sqrt5 = galois(4);
  FieldElement norm = *this * by_sqrt5;
  FieldElement by_sqrt3 = norm.galois(2);
  norm = norm * by_sqrt3;
  FieldElement by_i = norm.galois(1);
  norm = norm * by_i;
  Rational scale = Rational(1) / norm[kOne];
  return by_sqrt5 * by_sqrt3 * by_i * scale;
}

std::size_t FieldElement::hash() const noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (const auto& c : coords_) h = (h ^ c.hash()) * 0x100000001b3ULL;
  return h;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < kDim; ++k) {
    const Rational& c = coords_[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == kOne) {
      os << c.numerator_string();
      if (!c.is_integer()) os << "/" << c.denominator_string();
    } else {
      os << "(" << c.numerator_string();
      if (!c.is_integer()) os << "/" << c.denominator_string();
      os << ")*" << kBasisNames[k];
    }
  }
  if (first) os << "0";
  return os.str();
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  for (auto& c : out.coords_) {
    if (!c.is_zero()) c = -c;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  for (std::size_t k = 0; k < kDim; ++k) {
    if (!rhs.coords_[k].is_zero()) coords_[k] += rhs.coords_[k];
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  for (std::size_t k = 0; k < kDim; ++k) {
    if (!rhs.coords_[k].is_zero()) coords_[k] -= rhs.coords_[k];
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement out(a);
  out += b;
  return out;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement out(a);
  out -= b;
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement out;
  for (unsigned j = 0; j < FieldElement::kDim; ++j) {
    const Rational& x = a.coords_[j];
    if (x.is_zero()) continue;
    for (unsigned k = 0; k < FieldElement::kDim; ++k) {
      const Rational& y = b.coords_[k];
      if (y.is_zero()) continue;
      Rational term = x * y;
      std::int64_t scale = kProductScale[j & k];
      if (scale != 1) term *= Rational(scale);
      out.coords_[j ^ k] += term;
    }
  }
  return out;
}

FieldElement operator*(const FieldElement& a, const Rational& r) {
  if (r.is_one()) return a;
  FieldElement out;
  if (r.is_zero()) return out;
  for (std::size_t k = 0; k < FieldElement::kDim; ++k) {
    if (!a.coords_[k].is_zero()) out.coords_[k] = a.coords_[k] * r;
  }
  return out;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_rational()) {
    if (b.coords_[0].is_zero()) throw DivisionByZero();
    return a * (Rational(1) / b.coords_[0]);
  }
  return a * b.inverse();
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  for (std::size_t k = 0; k < FieldElement::kDim; ++k) {
    auto c = a.coords_[k] <=> b.coords_[k];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

FpElement reduce_mod_p(const FieldElement& a, std::int64_t p) {
  if (!is_odd_prime(p)) throw BadPrime(std::to_string(p) + " is not an odd prime");
  if (!a.is_rational()) throw NonRational("cannot reduce irrational element " + a.to_string() + " modulo a prime");
  return FpElement{a[FieldElement::kOne].mod(p), p};
}

}  // namespace maschke
