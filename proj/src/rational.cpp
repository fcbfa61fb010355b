#include "maschke/rational.hpp"

#include <climits>
#include <numeric>
#include <ostream>
#include <utility>

#include "maschke/errors.hpp"

namespace maschke {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax64 = INT64_MAX;
constexpr i128 kMin64 = -static_cast<i128>(INT64_MAX);

bool fits_small(i128 v) { return v >= kMin64 && v <= kMax64; }

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

void mpz_set_i128(mpz_t out, i128 v) {
  u128 mag = abs128(v);
  auto hi = static_cast<std::uint64_t>(mag >> 64);
  auto lo = static_cast<std::uint64_t>(mag);
  mpz_set_ui(out, hi);
  mpz_mul_2exp(out, out, 64);
  mpz_add_ui(out, out, lo);
  if (v < 0) mpz_neg(out, out);
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

std::size_t hash_mpz(mpz_srcptr z) {
  std::uint64_t h = static_cast<std::uint64_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    h = mix64(h ^ static_cast<std::uint64_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  }
  return static_cast<std::size_t>(h);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw BadPrime("denominator is not invertible modulo " + std::to_string(p));
  return t < 0 ? t + p : t;
}

}  // namespace

Rational::Rational(std::int64_t n) noexcept : num_(n), den_(1) {
  if (n == INT64_MIN) {
    auto* big = new mpq_class(static_cast<long>(n));
    big_ = big;
    den_ = 0;
  }
}

Rational::Rational(std::int64_t n, std::int64_t d) : num_(0), den_(1) {
  if (d == 0) throw DivisionByZero();
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class copy(q);
  copy.canonicalize();
  *this = from_mpq(std::move(copy));
}

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (den_ == 0) big_ = new mpq_class(*other.big_);
}

Rational::Rational(Rational&& other) noexcept : num_(other.num_), den_(other.den_) {
  other.num_ = 0;
  other.den_ = 1;
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  Rational tmp(other);
  return *this = std::move(tmp);
}

Rational& Rational::operator=(Rational&& other) noexcept {
  if (this == &other) return *this;
  if (den_ == 0) delete big_;
  num_ = other.num_;
  den_ = other.den_;
  other.num_ = 0;
  other.den_ = 1;
  return *this;
}

Rational::~Rational() {
  if (den_ == 0) delete big_;
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits_small(num) && fits_small(den)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  auto* big = new mpq_class();
  mpz_set_i128(big->get_num_mpz_t(), num);
  mpz_set_i128(big->get_den_mpz_t(), den);
  return Rational(BigTag{}, big);
}

Rational Rational::from_mpq(mpq_class&& q) {
  mpz_srcptr n = q.get_num_mpz_t();
  mpz_srcptr d = q.get_den_mpz_t();
  if (mpz_fits_slong_p(n) && mpz_fits_slong_p(d)) {
    long nv = mpz_get_si(n);
    if (nv != LONG_MIN) {
      Rational r;
      r.num_ = nv;
      r.den_ = mpz_get_si(d);
      return r;
    }
  }
  return Rational(BigTag{}, new mpq_class(std::move(q)));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw PreconditionError("malformed rational: '" + s + "'");
  }
  if (mpz_sgn(q.get_den_mpz_t()) == 0) throw DivisionByZero();
  q.canonicalize();
  return from_mpq(std::move(q));
}

bool Rational::is_integer() const {
  if (den_ != 0) return den_ == 1;
  return mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0;
}

int Rational::sign() const {
  if (den_ != 0) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
  if (den_ == 0) return *big_;
  mpq_class q(static_cast<long>(num_), static_cast<unsigned long>(den_));
  return q;
}

std::string Rational::numerator_string() const {
  if (den_ != 0) return std::to_string(num_);
  return big_->get_num().get_str();
}

std::string Rational::denominator_string() const {
  if (den_ != 0) return std::to_string(den_);
  return big_->get_den().get_str();
}

std::string Rational::to_string() const { return numerator_string() + "/" + denominator_string(); }

std::size_t Rational::hash() const noexcept {
  if (den_ != 0) {
    return static_cast<std::size_t>(mix64(static_cast<std::uint64_t>(num_)) ^
                                    (static_cast<std::uint64_t>(den_) * 0x9e3779b97f4a7c15ULL));
  }
  return hash_mpz(big_->get_num_mpz_t()) ^ (hash_mpz(big_->get_den_mpz_t()) << 1);
}

Rational Rational::operator-() const {
  if (den_ != 0) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_mpq(mpq_class(-*big_));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    if (b.num_ == 0) return a;
    if (a.num_ == 0) return b;
    if (a.den_ == b.den_) {
      return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    auto g1 = static_cast<std::int64_t>(std::gcd(a.num_, b.den_));
    auto g2 = static_cast<std::int64_t>(std::gcd(b.num_, a.den_));
    i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits_small(num) && fits_small(den)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
      return r;
    }
    return Rational::from_wide(num, den);
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.den_ != 0) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() / b.to_mpq()));
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (a.den_ != 0 && b.den_ != 0) return a.num_ == b.num_ && a.den_ == b.den_;
  // Canonical representation: a small value never equals a promoted one.
  if (a.den_ != 0 || b.den_ != 0) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = 0;
  if (a.den_ != 0 && b.den_ != 0) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    c = (lhs > rhs) - (lhs < rhs);
  } else {
    c = cmp(a.to_mpq(), b.to_mpq());
  }
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t Rational::mod(std::int64_t p) const {
  if (p < 3 || p % 2 == 0) throw BadPrime("modulus must be an odd prime, got " + std::to_string(p));
  std::int64_t n = 0;
  std::int64_t d = 0;
  if (den_ != 0) {
    n = num_ % p;
    d = den_ % p;
  } else {
    n = static_cast<std::int64_t>(mpz_fdiv_ui(big_->get_num_mpz_t(), static_cast<unsigned long>(p)));
    d = static_cast<std::int64_t>(mpz_fdiv_ui(big_->get_den_mpz_t(), static_cast<unsigned long>(p)));
  }
  if (n < 0) n += p;
  if (d == 0) throw BadPrime("denominator " + denominator_string() + " is divisible by " + std::to_string(p));
  return static_cast<std::int64_t>((static_cast<i128>(n) * mod_inverse(d, p)) % p);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace maschke
