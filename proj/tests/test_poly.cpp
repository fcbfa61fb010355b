#include "doctest.h"
#include "maschke/errors.hpp"
#include "maschke/matrix.hpp"
#include "maschke/poly.hpp"
#include "test_support.hpp"

using namespace maschke;
using maschke::testing::g31_generators;

namespace {

Poly var(int k) { return Poly::variable(k); }

Vector4 unit(std::size_t k) {
  Vector4 v;
  v[k] = FieldElement(1);
  return v;
}

// Random homogeneous polynomial of degree `deg` with a handful of terms.
Poly random_homogeneous(int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> split(0, deg);
  Poly p;
  for (int t = 0; t < 4; ++t) {
    int a = split(rng), b = split(rng);
    if (a > b) std::swap(a, b);
    Monomial m{{a, b - a, deg - b, 0}};
    std::shuffle(m.exps.begin(), m.exps.end(), rng);
    p.add_term(m, maschke::testing::random_element(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("sigma4 sums distinct orbit monomials") {
  Poly xy = sigma4(Monomial{{1, 1, 0, 0}});
  CHECK(xy.term_count() == 6);
  CHECK(xy == var(0) * var(1) + var(0) * var(2) + var(0) * var(3) + var(1) * var(2) + var(1) * var(3) +
                  var(2) * var(3));
  Poly xyzt = sigma4(Monomial{{1, 1, 1, 1}});
  CHECK(xyzt.term_count() == 1);
  CHECK(xyzt.coefficient(Monomial{{1, 1, 1, 1}}).is_one());
  Poly x8 = sigma4(Monomial{{8, 0, 0, 0}});
  CHECK(x8.term_count() == 4);
  CHECK(x8.coefficient(Monomial{{0, 0, 0, 8}}).is_one());
}

TEST_CASE("the octic has 11 rational integer terms") {
  Poly f = build_maschke_f();
  // 4 pure eighth powers, 6 pairs x_i^4 x_j^4, 1 product term.
  CHECK(f.term_count() == 4 + 6 + 1);
  CHECK(f.degree() == 8);
  CHECK(f.is_homogeneous());
  CHECK(f.coefficient(Monomial{{4, 4, 0, 0}}) == FieldElement(14));
  CHECK(f.coefficient(Monomial{{0, 4, 0, 4}}) == FieldElement(14));
  CHECK(f.coefficient(Monomial{{2, 2, 2, 2}}) == FieldElement(168));
  for (const auto& [m, c] : f.terms()) CHECK(c.is_rational());
  CHECK(f.evaluate(unit(0)).is_one());
  CHECK(f.evaluate({FieldElement(1), FieldElement(1), FieldElement(1), FieldElement(1)}) ==
        FieldElement(4 + 14 * 6 + 168));
}

TEST_CASE("compose_linear examples") {
  Poly f = build_maschke_f();
  CHECK(compose_linear(f, MatrixK::identity()) == f);
  const auto& g = g31_generators().matrices;
  CHECK(compose_linear(var(0), g[0]) == var(1));  // s1 swaps x and y
  CHECK(compose_linear(f, g[4]) == f);             // s5 negates x; f is even in x
  CHECK(compose_linear(Poly(), g[3]).is_zero());
}

TEST_CASE("partial_derivative examples") {
  Poly x8 = Poly::monomial(Monomial{{8, 0, 0, 0}});
  CHECK(partial_derivative(x8, 0) == Poly::monomial(Monomial{{7, 0, 0, 0}}, FieldElement(8)));
  CHECK(partial_derivative(x8, 1).is_zero());
  Poly sq = Poly::monomial(Monomial{{2, 2, 2, 2}});
  CHECK(partial_derivative(sq, 3) == Poly::monomial(Monomial{{2, 2, 2, 1}}, FieldElement(2)));
  // At (1,0,0,0) only 8x^7 survives.
  CHECK(partial_derivative(build_maschke_f(), 0).evaluate(unit(0)) == FieldElement(8));
  CHECK_THROWS_AS(partial_derivative(x8, 4), DomainError);
}

TEST_CASE("restrict_to_line examples") {
  Poly f = build_maschke_f();
  // z = t = 0 leaves x^8 + 14 x^4 y^4 + y^8.
  BinaryForm r = restrict_to_line(f, unit(0), unit(1));
  REQUIRE(r.coeffs.size() == 9);
  std::vector<FieldElement> expected{1, 0, 0, 0, 14, 0, 0, 0, 1};
  CHECK(r.coeffs == expected);

  BinaryForm zero = restrict_to_line(Poly(), unit(0), unit(1));
  CHECK(zero.coeffs.size() == 9);
  CHECK(zero.is_zero());

  Vector4 twice_e1 = unit(0);
  twice_e1[0] = FieldElement(2);
  CHECK_THROWS_AS(restrict_to_line(f, unit(0), twice_e1), DegenerateSpan);
  CHECK_THROWS_AS(restrict_to_line(var(0), unit(0), unit(1)), PreconditionError);
}

TEST_CASE("sigma4 output is fixed by every permutation matrix") {
  for (const Monomial& m : {Monomial{{1, 1, 0, 0}}, Monomial{{3, 2, 1, 0}}, Monomial{{4, 4, 0, 0}}}) {
    Poly s = sigma4(m);
    for (const auto& perm : maschke::testing::all_permutation_matrices()) CHECK(compose_linear(s, perm) == s);
  }
}

TEST_CASE("compose_linear is multiplicative in the matrix") {
  std::mt19937_64 rng(4242);
  const auto& gens = g31_generators();
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_homogeneous(1 + trial % 4, rng);
    MatrixK a = maschke::testing::random_word(gens, 3, rng);
    MatrixK b = maschke::testing::random_word(gens, 3, rng);
    // (p o A) o B evaluated at v is p(A B v).
    CHECK(compose_linear(compose_linear(p, a), b) == compose_linear(p, a * b));
  }
}

TEST_CASE("Euler identity 8 f = sum x_i df/dx_i") {
  Poly f = build_maschke_f();
  Poly sum;
  for (int k = 0; k < 4; ++k) sum += var(k) * partial_derivative(f, k);
  CHECK(sum == FieldElement(8) * f);
}

TEST_CASE("swapping the spanning points reverses the binary form") {
  std::mt19937_64 rng(11);
  Poly f = build_maschke_f();
  for (int trial = 0; trial < 20; ++trial) {
    Vector4 a, b;
    for (auto& x : a) x = maschke::testing::random_element(rng);
    for (auto& x : b) x = maschke::testing::random_element(rng);
    BinaryForm ab, ba;
    try {
      ab = restrict_to_line(f, a, b);
      ba = restrict_to_line(f, b, a);
    } catch (const DegenerateSpan&) {
      continue;
    }
    std::reverse(ba.coeffs.begin(), ba.coeffs.end());
    CHECK(ab == ba);
  }
}
