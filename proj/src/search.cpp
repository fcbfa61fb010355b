#include "maschke/search.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "maschke/errors.hpp"

namespace maschke {
namespace {

using Clock = std::chrono::steady_clock;
using Bits = std::vector<std::uint64_t>;

std::size_t popcount_and(const Bits& b, std::span<const std::uint64_t> row) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < b.size(); ++i) c += static_cast<std::size_t>(std::popcount(b[i] & row[i]));
  return c;
}

void clear(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t word = b[w];
    while (word != 0) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
}

void remove_closed_neighborhood(const Graph& g, Bits& cand, std::size_t v) {
  auto row = g.row(v);
  for (std::size_t i = 0; i < cand.size(); ++i) cand[i] &= ~row[i];
  clear(cand, v);
}

class Searcher {
 public:
  Searcher(const Graph& g, std::size_t target, const SearchOptions& options)
      : g_(g), target_(target), options_(options), deadline_(Clock::now() + options.budget), rng_(options.rng_seed) {}

  std::vector<std::size_t> run(SearchStats& stats) {
    Bits all(g_.words(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);

    if (!options_.seed.empty()) {
      if (!g_.is_independent(options_.seed)) throw PreconditionError("search seed is not an independent set");
      Bits cand = all;
      for (auto v : options_.seed) remove_closed_neighborhood(g_, cand, v);
      consider(greedy(cand, options_.seed, false));
    }
    // Deterministic first round, then randomized tie-breaking.
    consider(greedy(all, {}, false));
    ++stats.greedy_rounds;
    const std::uint64_t random_rounds = 64;
    for (std::uint64_t r = 0; r < random_rounds && !done() && !expired(); ++r) {
      consider(greedy(all, {}, true));
      ++stats.greedy_rounds;
    }
    if (!done()) {
      std::vector<std::size_t> current;
      stats.exhausted = branch(all, current);
    }
    stats.nodes = nodes_;
    stats.best_size = best_.size();
    return best_;
  }

 private:
  bool done() const { return best_.size() >= target_; }
  bool expired() const { return Clock::now() >= deadline_; }

  void consider(std::vector<std::size_t> candidate) {
    if (candidate.size() > best_.size()) best_ = std::move(candidate);
  }

  std::vector<std::size_t> greedy(Bits cand, std::vector<std::size_t> chosen, bool randomize) {
    while (true) {
      std::size_t best_deg = SIZE_MAX;
      std::vector<std::size_t> ties;
      for_each_bit(cand, [&](std::size_t v) {
        std::size_t d = popcount_and(cand, g_.row(v));
        if (d < best_deg) {
          best_deg = d;
          ties.clear();
        }
        if (d == best_deg) ties.push_back(v);
      });
      if (ties.empty()) break;
      std::size_t pick = ties.front();
      if (randomize) pick = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng_)];
      chosen.push_back(pick);
      remove_closed_neighborhood(g_, cand, pick);
    }
    return chosen;
  }

  // Upper bound on the independence number of the candidate subgraph: a
  // vertex cover needs at least |E| / maxdeg vertices.
  std::size_t bound(const Bits& cand, std::size_t& pivot) const {
    std::size_t count = 0, edges2 = 0, max_deg = 0;
    pivot = SIZE_MAX;
    for_each_bit(cand, [&](std::size_t v) {
      ++count;
      std::size_t d = popcount_and(cand, g_.row(v));
      edges2 += d;
      if (pivot == SIZE_MAX || d > max_deg) {
        max_deg = d;
        pivot = v;
      }
    });
    if (max_deg == 0) return count;
    std::size_t edges = edges2 / 2;
    return count - (edges + max_deg - 1) / max_deg;
  }

  // Returns false if the budget ran out before the subtree was exhausted.
  bool branch(const Bits& cand, std::vector<std::size_t>& current) {
    if (done()) return true;
    if ((++nodes_ & 1023u) == 0 && expired()) return false;
    std::size_t pivot = SIZE_MAX;
    std::size_t ub = bound(cand, pivot);
    if (current.size() + ub <= best_.size()) return true;
    if (pivot == SIZE_MAX) {
      consider(current);
      return true;
    }
    if (popcount_and(cand, g_.row(pivot)) == 0) {
      // No edges left among candidates: take them all.
      std::vector<std::size_t> all = current;
      for_each_bit(cand, [&](std::size_t v) { all.push_back(v); });
      consider(std::move(all));
      return true;
    }
    Bits with = cand;
    remove_closed_neighborhood(g_, with, pivot);
    current.push_back(pivot);
    bool complete = branch(with, current);
    current.pop_back();
    if (!complete) return false;

    Bits without = cand;
    clear(without, pivot);
    return branch(without, current);
  }

  const Graph& g_;
  std::size_t target_;
  const SearchOptions& options_;
  Clock::time_point deadline_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const { return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u; }

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

bool Graph::is_independent(std::span<const std::size_t> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n_) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

std::optional<std::vector<std::size_t>> independent_set_search(const Graph& g, std::size_t target,
                                                               const SearchOptions& options, SearchStats* stats) {
  if (target > g.size()) throw PreconditionError("target exceeds the vertex count");
  SearchStats local;
  Searcher searcher(g, target, options);
  std::vector<std::size_t> best = searcher.run(stats ? *stats : local);
  if (best.size() < target) return std::nullopt;
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace maschke
