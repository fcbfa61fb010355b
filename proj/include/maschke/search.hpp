#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace maschke {

/// Undirected simple graph with bitset adjacency rows.
class Graph {
 public:
  explicit Graph(std::size_t n);

  std::size_t size() const { return n_; }
  /// Adds {u, v}; self-loops are ignored.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  bool is_independent(std::span<const std::size_t> vertices) const;

  std::span<const std::uint64_t> row(std::size_t v) const { return {rows_.data() + v * words_, words_}; }
  std::size_t words() const { return words_; }

  static Graph complete(std::size_t n);

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

struct SearchOptions {
  std::chrono::milliseconds budget{10000};
  /// Optional starting set, extended greedily; must be independent.
  std::vector<std::size_t> seed;
  std::uint64_t rng_seed = 0x5eed;
};

struct SearchStats {
  std::size_t best_size = 0;
  std::uint64_t greedy_rounds = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;  ///< branch and bound finished inside the budget
};

/// Best-effort search for an independent set of size >= target: greedy
/// min-degree rounds, then branch and bound with a degree-based bound, all
/// inside the time budget. Returns a sorted vertex set, or nullopt. A
/// nullopt is not a proof that no such set exists unless stats->exhausted.
std::optional<std::vector<std::size_t>> independent_set_search(const Graph& g, std::size_t target,
                                                               const SearchOptions& options = {},
                                                               SearchStats* stats = nullptr);

}  // namespace maschke
