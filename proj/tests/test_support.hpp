#pragma once

// Shared generators and fixtures for the unit tests.

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "maschke/field.hpp"
#include "maschke/group.hpp"
#include "maschke/matrix.hpp"

namespace maschke::testing {

/// Random element of K with small coordinates, roughly half of them zero.
inline FieldElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution keep(0.5);
  FieldElement::Coords c;
  for (auto& x : c) {
    if (keep(rng)) x = Rational(num(rng), den(rng));
  }
  return FieldElement(c);
}

inline FieldElement random_nonzero(std::mt19937_64& rng) {
  FieldElement x;
  while (x.is_zero()) x = random_element(rng);
  return x;
}

inline MatrixK permutation_matrix(const std::array<int, 4>& perm) {
  MatrixK m;
  for (std::size_t r = 0; r < 4; ++r) m(r, static_cast<std::size_t>(perm[r])) = FieldElement(1);
  return m;
}

inline std::vector<MatrixK> all_permutation_matrices() {
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<MatrixK> out;
  do {
    out.push_back(permutation_matrix(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Random word of length `len` in the generators.
inline MatrixK random_word(const GeneratorSet& gens, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.matrices.size() - 1);
  MatrixK m = MatrixK::identity();
  for (std::size_t k = 0; k < len; ++k) m = m * gens.matrices[pick(rng)];
  return m;
}

inline const GeneratorSet& g31_generators() {
  static const GeneratorSet g = builtin_generators(BuiltinGroup::kG31);
  return g;
}

inline const GeneratorSet& ab_generators() {
  static const GeneratorSet g = builtin_generators(BuiltinGroup::kAB);
  return g;
}

inline const GroupClosure& g31_closure() {
  static const GroupClosure g = closure(g31_generators());
  return g;
}

}  // namespace maschke::testing
