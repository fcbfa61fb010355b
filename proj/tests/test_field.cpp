#include <climits>
#include <unordered_set>

#include "doctest.h"
#include "maschke/errors.hpp"
#include "maschke/field.hpp"
#include "test_support.hpp"

using namespace maschke;
using maschke::testing::random_element;
using maschke::testing::random_nonzero;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, 5).to_string() == "0/1");
  CHECK(Rational::parse("-14/28") == Rational(-1, 2));
  CHECK(Rational::parse("168") == Rational(168));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("abc"), PreconditionError);
}

TEST_CASE("rational promotes to GMP on overflow and demotes back") {
  Rational big = Rational(INT64_MAX) * Rational(INT64_MAX);
  CHECK_FALSE(big.is_small());
  CHECK(big.numerator_string() == "85070591730234615847396907784232501249");
  Rational back = big / Rational(INT64_MAX);
  CHECK(back.is_small());
  CHECK(back == Rational(INT64_MAX));
  CHECK(back.hash() == Rational(INT64_MAX).hash());

  Rational sum = Rational(INT64_MAX) + Rational(INT64_MAX);
  CHECK_FALSE(sum.is_small());
  CHECK(sum - Rational(INT64_MAX) == Rational(INT64_MAX));
  CHECK(Rational(INT64_MIN).to_string() == "-9223372036854775808/1");
  CHECK((Rational(1, 3) <=> big) < 0);
  CHECK(Rational::parse(big.to_string()) == big);
  CHECK(Rational::parse(big.to_string()).hash() == big.hash());
}

TEST_CASE("fe_add examples") {
  const FieldElement i = FieldElement::i();
  CHECK((i + (-i)).is_zero());
  FieldElement x = FieldElement(1) + FieldElement::sqrt3();
  CHECK(x[0] == Rational(1));
  CHECK(x[FieldElement::kSqrt3] == Rational(1));
  for (std::size_t k : {1, 3, 4, 5, 6, 7}) CHECK(x[k].is_zero());
  FieldElement lhs = (FieldElement(1) - i) * Rational(1, 2);
  FieldElement rhs = (FieldElement(1) + i) * Rational(1, 2);
  CHECK((lhs + rhs).is_one());
}

TEST_CASE("fe_mul examples") {
  const FieldElement i = FieldElement::i();
  CHECK(i * i == FieldElement(-1));
  CHECK((FieldElement(1) - i) * (FieldElement(1) + i) == FieldElement(2));
  CHECK(FieldElement::sqrt3() * FieldElement::sqrt5() == FieldElement::basis(FieldElement::kSqrt15));
  CHECK(FieldElement::sqrt3() * FieldElement::sqrt3() == FieldElement(3));
  CHECK(FieldElement::sqrt5() * FieldElement::sqrt5() == FieldElement(5));
  CHECK(FieldElement::basis(FieldElement::kISqrt15) * FieldElement::basis(FieldElement::kISqrt15) == FieldElement(-15));
}

TEST_CASE("fe_inv examples") {
  CHECK(FieldElement(2).inverse() == FieldElement(Rational(1, 2)));
  // (sqrt3 + 1)(sqrt3 - 1)/2 = (3 - 1)/2 = 1, so the inverse is (sqrt3 - 1)/2.
  FieldElement expected = (FieldElement::sqrt3() - FieldElement(1)) * Rational(1, 2);
  CHECK((FieldElement::sqrt3() + FieldElement(1)) * expected == FieldElement(1));
  CHECK((FieldElement::sqrt3() + FieldElement(1)).inverse() == expected);
  CHECK(FieldElement::i().inverse() == -FieldElement::i());
  CHECK_THROWS_AS(FieldElement().inverse(), DivisionByZero);
  CHECK_THROWS_AS(FieldElement(1) / FieldElement(), DivisionByZero);
}

TEST_CASE("reduce_mod_p examples and errors") {
  CHECK(reduce_mod_p(FieldElement(14), 11).value == 3);
  CHECK(reduce_mod_p(FieldElement(168), 7).value == 0);
  CHECK(reduce_mod_p(FieldElement(Rational(1, 2)), 7).value == 4);
  CHECK(reduce_mod_p(FieldElement(-1), 5).value == 4);
  CHECK_THROWS_AS(reduce_mod_p(FieldElement::i(), 7), NonRational);
  CHECK_THROWS_AS(reduce_mod_p(FieldElement(Rational(1, 7)), 7), BadPrime);
  CHECK_THROWS_AS(reduce_mod_p(FieldElement(1), 9), BadPrime);
  CHECK_THROWS_AS(reduce_mod_p(FieldElement(1), 2), BadPrime);
}

TEST_CASE("galois automorphisms fix exactly the expected subfields") {
  const FieldElement i = FieldElement::i();
  CHECK(i.galois(1) == -i);
  CHECK(i.galois(6) == i);
  CHECK(FieldElement::basis(FieldElement::kSqrt15).galois(2) == -FieldElement::basis(FieldElement::kSqrt15));
  CHECK(FieldElement::basis(FieldElement::kSqrt15).galois(6) == FieldElement::basis(FieldElement::kSqrt15));
}

TEST_CASE("field axioms hold on random triples") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    FieldElement a = random_element(rng);
    FieldElement b = random_element(rng);
    FieldElement c = random_element(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(a * FieldElement(1) == a);
    if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
    // Automorphisms are ring homomorphisms.
    unsigned mask = static_cast<unsigned>(trial % 8);
    REQUIRE((a * b).galois(mask) == a.galois(mask) * b.galois(mask));
  }
}

TEST_CASE("inverse is exact for every nonzero element") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    FieldElement a = random_nonzero(rng);
    FieldElement inv = a.inverse();
    CHECK((a * inv).is_one());
    CHECK(inv.inverse() == a);
    for (const auto& coord : inv.coords()) CHECK(coord.denominator_string() != "0");
  }
}

TEST_CASE("equal elements hash equally") {
  std::mt19937_64 rng(99);
  std::unordered_set<FieldElement> seen;
  for (int trial = 0; trial < 300; ++trial) {
    FieldElement a = random_element(rng);
    FieldElement b = random_element(rng);
    // Same value reached by two routes.
    FieldElement sum1 = a + b;
    FieldElement sum2 = (b * FieldElement(2) + a) - b;
    CHECK(sum1 == sum2);
    CHECK(sum1.hash() == sum2.hash());
    seen.insert(sum1);
    CHECK(seen.count(sum2) == 1);
  }
}
