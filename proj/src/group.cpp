#include "maschke/group.hpp"

#include <random>

namespace maschke {

GeneratorSet builtin_generators(BuiltinGroup which) {
  const FieldElement i = FieldElement::i();
  if (which == BuiltinGroup::kG31) {
    MatrixK s1 = MatrixK::from_rows({{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
    MatrixK s2 = MatrixK::from_rows({{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}});
    MatrixK s3 = MatrixK::from_rows({{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
    s3(0, 1) = -i;
    s3(1, 0) = i;
    MatrixK s4 = MatrixK::from_rows({{{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}}},
                                    FieldElement(Rational(1, 2)));
    MatrixK s5 = MatrixK::from_rows({{{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
    return {"G31", {s1, s2, s3, s4, s5}};
  }
  const FieldElement half_one_minus_i = (FieldElement(1) - i) * Rational(1, 2);
  MatrixK a = MatrixK::from_rows({{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, 1, 0}, {1, 0, 0, -1}}}, half_one_minus_i);
  MatrixK b = MatrixK::from_rows({{{0, 0, -1, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}});
  return {"AB", {a, b}};
}

std::optional<std::size_t> GroupClosure::find(const MatrixK& m, std::size_t h) const {
  auto [lo, hi] = index_.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    if (elements_[it->second] == m) return it->second;
  }
  return std::nullopt;
}

bool GroupClosure::insert(MatrixK m) {
  std::size_t h = m.hash();
  if (find(m, h)) return false;
  index_.emplace(h, static_cast<std::uint32_t>(elements_.size()));
  elements_.push_back(std::move(m));
  return true;
}

struct ClosureBuilder {
  static GroupClosure run(const GeneratorSet& gens, const ClosureOptions& options) {
    GroupClosure g;
    g.insert(MatrixK::identity());
    std::vector<std::size_t> pending{0};
    std::mt19937_64 rng(options.shuffle_seed.value_or(0));
    std::size_t head = 0;
    while (head < pending.size()) {
      if (options.shuffle_seed) {
        std::uniform_int_distribution<std::size_t> pick(head, pending.size() - 1);
        std::swap(pending[head], pending[pick(rng)]);
      }
      std::size_t current = pending[head++];
      for (const auto& gen : gens.matrices) {
        MatrixK product = g.elements_[current] * gen;
        if (g.insert(std::move(product))) {
          if (g.order() > options.cap) {
            throw CapExceeded("closure of " + gens.name + " exceeded cap of " + std::to_string(options.cap));
          }
          pending.push_back(g.order() - 1);
        }
      }
    }
    return g;
  }
};

GroupClosure closure(const GeneratorSet& gens, const ClosureOptions& options) {
  return ClosureBuilder::run(gens, options);
}

}  // namespace maschke
