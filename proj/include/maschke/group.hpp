#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "maschke/errors.hpp"
#include "maschke/matrix.hpp"

namespace maschke {

struct GeneratorSet {
  std::string name;
  std::vector<MatrixK> matrices;
};

enum class BuiltinGroup {
  kG31,  // reflections s1..s5
  kAB,   // the pair a, b generating the order-1152 subgroup
};

GeneratorSet builtin_generators(BuiltinGroup which);

inline constexpr std::size_t kDefaultGroupCap = 100000;
inline constexpr std::size_t kDefaultOrbitCap = 1000;

// Finite matrix group stored as a list in discovery order with a hash index.
class GroupClosure {
 public:
  std::size_t order() const { return elements_.size(); }
  const std::vector<MatrixK>& elements() const { return elements_; }
  bool contains(const MatrixK& m) const { return find(m, m.hash()).has_value(); }

 private:
  friend struct ClosureBuilder;
  std::optional<std::size_t> find(const MatrixK& m, std::size_t h) const;
  bool insert(MatrixK m);

  std::vector<MatrixK> elements_;
  std::unordered_multimap<std::size_t, std::uint32_t> index_;
};

struct ClosureOptions {
  std::size_t cap = kDefaultGroupCap;
  /// When set, the pending queue is processed in a pseudo-random order
  /// driven by this seed instead of first-in first-out.
  std::optional<std::uint64_t> shuffle_seed;
};

/// All products of the generators, by breadth-first right multiplication.
/// Throws CapExceeded if more than `cap` elements appear.
GroupClosure closure(const GeneratorSet& gens, const ClosureOptions& options = {});

/// BFS closure of {seed} under `act(g, x)` for g in gens. T needs
/// std::hash<T> and operator==. Result is in discovery order.
template <class T, class Act>
std::vector<T> orbit(const GeneratorSet& gens, const T& seed, Act&& act, std::size_t cap = kDefaultOrbitCap) {
  std::vector<T> members{seed};
  std::unordered_set<T> seen{seed};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& g : gens.matrices) {
      T image = act(g, members[head]);
      if (seen.insert(image).second) {
        if (members.size() >= cap) throw CapExceeded("orbit exceeded cap of " + std::to_string(cap));
        members.push_back(std::move(image));
      }
    }
  }
  return members;
}

}  // namespace maschke
