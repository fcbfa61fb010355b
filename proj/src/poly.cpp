#include "maschke/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "maschke/errors.hpp"
#include "maschke/matrix.hpp"

namespace maschke {
namespace {

constexpr std::array<const char*, 4> kVarNames = {"x", "y", "z", "t"};

// Binary forms as coefficient vectors indexed by the power of s.
std::vector<FieldElement> convolve(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  std::vector<FieldElement> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

bool proportional(const Vector4& a, const Vector4& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const FieldElement& c) { return c.is_zero(); });
}

Poly Poly::monomial(const Monomial& m, const FieldElement& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(int var) {
  Monomial m;
  m.exps.at(static_cast<std::size_t>(var)) = 1;
  return monomial(m);
}

bool Poly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [this](const auto& kv) { return kv.first.degree() == degree_; });
}

FieldElement Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement() : it->second;
}

void Poly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
      if (m.degree() == degree_) recompute_degree();
      return;
    }
  }
  degree_ = std::max(degree_, m.degree());
}

void Poly::recompute_degree() {
  degree_ = kZeroDegree;
  for (const auto& [m, c] : terms_) degree_ = std::max(degree_, m.degree());
}

FieldElement Poly::evaluate(const Vector4& v) const {
  FieldElement sum;
  for (const auto& [m, c] : terms_) {
    FieldElement term = c;
    for (std::size_t k = 0; k < 4; ++k) {
      for (int e = 0; e < m.exps[k]; ++e) term *= v[k];
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [m, c] = *it;
    bool unit = c.is_one();
    if (!unit || m.degree() == 0) os << (c.is_rational() ? c.to_string() : "(" + c.to_string() + ")");
    bool need_star = !unit;
    for (std::size_t k = 0; k < 4; ++k) {
      if (m.exps[k] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << kVarNames[k];
      if (m.exps[k] > 1) os << "^" << m.exps[k];
    }
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out(a);
  out += b;
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out(a);
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t k = 0; k < 4; ++k) m.exps[k] = ma.exps[k] + mb.exps[k];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly operator*(const FieldElement& c, const Poly& p) {
  Poly out;
  for (const auto& [m, coeff] : p.terms_) out.add_term(m, c * coeff);
  return out;
}

Poly sigma4(const Monomial& m) {
  std::array<int, 4> exps = m.exps;
  std::sort(exps.begin(), exps.end());
  Poly out;
  do {
    out.add_term(Monomial{exps}, FieldElement(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

Poly build_maschke_f() {
  Poly f = sigma4(Monomial{{8, 0, 0, 0}});
  f += FieldElement(14) * sigma4(Monomial{{4, 4, 0, 0}});
  f += FieldElement(168) * sigma4(Monomial{{2, 2, 2, 2}});
  return f;
}

Poly compose_linear(const Poly& p, const MatrixK& m) {
  // Variable k becomes the linear form sum_j M(k, j) x_j.
  std::array<std::vector<Poly>, 4> powers;
  for (std::size_t k = 0; k < 4; ++k) {
    Poly form;
    for (std::size_t j = 0; j < 4; ++j) {
      Monomial mono;
      mono.exps[j] = 1;
      form.add_term(mono, m(k, j));
    }
    powers[k].push_back(Poly::monomial(Monomial{}));
    powers[k].push_back(std::move(form));
  }
  auto power = [&powers](std::size_t k, int e) -> const Poly& {
    auto& cache = powers[k];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<std::size_t>(e)];
  };

  Poly out;
  for (const auto& [mono, c] : p.terms()) {
    Poly term = Poly::monomial(Monomial{}, c);
    for (std::size_t k = 0; k < 4; ++k) {
      if (mono.exps[k] > 0) term = term * power(k, mono.exps[k]);
    }
    out += term;
  }
  return out;
}

Poly partial_derivative(const Poly& p, int var) {
  if (var < 0 || var > 3) throw DomainError("variable index must be in 0..3");
  auto v = static_cast<std::size_t>(var);
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.exps[v] == 0) continue;
    Monomial d = m;
    d.exps[v] -= 1;
    out.add_term(d, c * Rational(m.exps[v]));
  }
  return out;
}

BinaryForm restrict_to_line(const Poly& p, const Vector4& a, const Vector4& b, int degree) {
  if (degree < 0) throw DomainError("degree must be nonnegative");
  if (proportional(a, b)) throw DegenerateSpan("spanning points are proportional");
  if (!p.is_zero() && (p.degree() != degree || !p.is_homogeneous())) {
    throw PreconditionError("restrict_to_line expects a homogeneous polynomial of degree " + std::to_string(degree));
  }
  BinaryForm out{std::vector<FieldElement>(static_cast<std::size_t>(degree) + 1)};
  if (p.is_zero()) return out;

  // Coordinate k of s a + t b as a binary linear form: [t-coefficient, s-coefficient].
  std::array<std::vector<std::vector<FieldElement>>, 4> powers;
  for (std::size_t k = 0; k < 4; ++k) {
    powers[k].push_back({FieldElement(1)});
    powers[k].push_back({b[k], a[k]});
  }
  for (const auto& [m, c] : p.terms()) {
    std::vector<FieldElement> term{c};
    for (std::size_t k = 0; k < 4; ++k) {
      auto& cache = powers[k];
      while (static_cast<int>(cache.size()) <= m.exps[k]) cache.push_back(convolve(cache.back(), cache[1]));
      if (m.exps[k] > 0) term = convolve(term, cache[static_cast<std::size_t>(m.exps[k])]);
    }
    for (std::size_t i = 0; i < term.size(); ++i) out.coeffs[i] += term[i];
  }
  return out;
}

}  // namespace maschke
