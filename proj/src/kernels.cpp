#include "maschke/kernels.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "maschke/errors.hpp"

namespace maschke {
namespace {

using Minors = std::array<FieldElement, 6>;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

bool is_singular(const FpSingularSystem& system, const FpPoint& pt) {
  for (const auto& poly : system.polys) {
    if (poly.evaluate(pt) != 0) return false;
  }
  return true;
}

constexpr std::uint64_t kNoPair = std::numeric_limits<std::uint64_t>::max();

}  // namespace

FpPoly FpPoly::reduce(const Poly& p, std::int64_t prime) {
  FpPoly out;
  out.prime = prime;
  for (const auto& [m, c] : p.terms()) {
    std::int64_t v = reduce_mod_p(c, prime).value;
    if (v != 0) out.terms.emplace_back(m, v);
  }
  return out;
}

std::int64_t FpPoly::evaluate(const std::array<std::int64_t, 4>& point) const {
  std::int64_t sum = 0;
  for (const auto& [m, c] : terms) {
    std::int64_t term = c;
    for (std::size_t k = 0; k < 4 && term != 0; ++k) {
      for (int e = 0; e < m.exps[k]; ++e) term = mulmod(term, point[k], prime);
    }
    sum = (sum + term) % prime;
  }
  return sum;
}

FpSingularSystem FpSingularSystem::from(const Poly& f, std::int64_t prime) {
  FpSingularSystem s;
  s.prime = prime;
  s.polys[0] = FpPoly::reduce(f, prime);
  for (int v = 0; v < 4; ++v) s.polys[static_cast<std::size_t>(v) + 1] = FpPoly::reduce(partial_derivative(f, v), prime);
  return s;
}

std::uint64_t projective_point_count(std::int64_t p) {
  auto q = static_cast<std::uint64_t>(p);
  return q * q * q + q * q + q + 1;
}

FpPoint projective_point(std::int64_t p, std::uint64_t index) {
  auto q = static_cast<std::uint64_t>(p);
  // Blocks: (1,*,*,*), (0,1,*,*), (0,0,1,*), (0,0,0,1).
  FpPoint pt{};
  std::size_t lead = 0;
  std::uint64_t block = q * q * q;
  while (index >= block) {
    index -= block;
    ++lead;
    block /= q;
  }
  pt[lead] = 1;
  for (std::size_t k = 3; k > lead; --k) {
    pt[k] = static_cast<std::int64_t>(index % q);
    index /= q;
  }
  return pt;
}

FieldElement molien_term(const MatrixK& g, int degree) {
  auto c = reversed_char_poly(g);
  std::vector<FieldElement> series(static_cast<std::size_t>(degree) + 1);
  series[0] = FieldElement(1);
  for (int n = 1; n <= degree; ++n) {
    FieldElement acc;
    for (int k = 1; k <= std::min(4, n); ++k) {
      const auto& ck = c[static_cast<std::size_t>(k)];
      const auto& prev = series[static_cast<std::size_t>(n - k)];
      if (!ck.is_zero() && !prev.is_zero()) acc -= ck * prev;
    }
    series[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return series.back();
}

namespace serial {

DisjointSweep disjoint_sweep(std::span<const Line> lines) {
  std::vector<Minors> minors;
  minors.reserve(lines.size());
  for (const auto& l : lines) minors.push_back(row_pair_minors(l));
  DisjointSweep out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      ++out.pairs_checked;
      if (meet_determinant(minors[i], minors[j]).is_zero()) {
        ++out.meeting_pairs;
        if (!out.first_meeting) out.first_meeting = IndexPair{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
      }
    }
  }
  return out;
}

std::vector<IndexPair> meeting_pairs(std::span<const Line> lines) {
  std::vector<Minors> minors;
  minors.reserve(lines.size());
  for (const auto& l : lines) minors.push_back(row_pair_minors(l));
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (meet_determinant(minors[i], minors[j]).is_zero()) {
        edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
  }
  return edges;
}

SingularScan singular_scan(const FpSingularSystem& system) {
  SingularScan out;
  out.prime = system.prime;
  const std::uint64_t n = projective_point_count(system.prime);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    ++out.points_scanned;
    FpPoint pt = projective_point(system.prime, idx);
    if (!out.first_singular && is_singular(system, pt)) out.first_singular = pt;
  }
  return out;
}

FieldElement molien_sum(std::span<const MatrixK> group, int degree) {
  FieldElement sum;
  for (const auto& g : group) sum += molien_term(g, degree);
  return sum;
}

}  // namespace serial

namespace parallel {

DisjointSweep disjoint_sweep(std::span<const Line> lines, int workers) {
  const auto n = static_cast<std::int64_t>(lines.size());
  std::vector<Minors> minors(lines.size());
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) minors[static_cast<std::size_t>(i)] = row_pair_minors(lines[static_cast<std::size_t>(i)]);

  std::uint64_t checked = 0;
  std::uint64_t meeting = 0;
  std::uint64_t first = kNoPair;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4) reduction(+ : checked, meeting) reduction(min : first)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      ++checked;
      if (meet_determinant(minors[static_cast<std::size_t>(i)], minors[static_cast<std::size_t>(j)]).is_zero()) {
        ++meeting;
        first = std::min(first, static_cast<std::uint64_t>(i * n + j));
      }
    }
  }
  DisjointSweep out{checked, meeting, std::nullopt};
  if (first != kNoPair) {
    out.first_meeting = IndexPair{static_cast<std::uint32_t>(first / static_cast<std::uint64_t>(n)),
                                  static_cast<std::uint32_t>(first % static_cast<std::uint64_t>(n))};
  }
  return out;
}

std::vector<IndexPair> meeting_pairs(std::span<const Line> lines, int workers) {
  const auto n = static_cast<std::int64_t>(lines.size());
  std::vector<Minors> minors(lines.size());
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) minors[static_cast<std::size_t>(i)] = row_pair_minors(lines[static_cast<std::size_t>(i)]);

  // One edge list per row, concatenated in row order afterwards.
  std::vector<std::vector<IndexPair>> rows(lines.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (meet_determinant(minors[static_cast<std::size_t>(i)], minors[static_cast<std::size_t>(j)]).is_zero()) {
        row.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
  }
  std::vector<IndexPair> edges;
  for (auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
  return edges;
}

SingularScan singular_scan(const FpSingularSystem& system, int workers) {
  const auto n = static_cast<std::int64_t>(projective_point_count(system.prime));
  std::uint64_t scanned = 0;
  std::uint64_t first = kNoPair;
#pragma omp parallel for num_threads(workers) schedule(static) reduction(+ : scanned) reduction(min : first)
  for (std::int64_t idx = 0; idx < n; ++idx) {
    ++scanned;
    if (is_singular(system, projective_point(system.prime, static_cast<std::uint64_t>(idx)))) {
      first = std::min(first, static_cast<std::uint64_t>(idx));
    }
  }
  SingularScan out{system.prime, scanned, std::nullopt};
  if (first != kNoPair) out.first_singular = projective_point(system.prime, first);
  return out;
}

FieldElement molien_sum(std::span<const MatrixK> group, int degree, int workers) {
  const auto n = static_cast<std::int64_t>(group.size());
  int slots = 1;
#ifdef _OPENMP
  slots = std::max(1, workers);
#endif
  std::vector<FieldElement> partial(static_cast<std::size_t>(slots));
#pragma omp parallel num_threads(slots)
  {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    FieldElement local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) local += molien_term(group[static_cast<std::size_t>(i)], degree);
    partial[static_cast<std::size_t>(tid)] = std::move(local);
  }
  // Exact arithmetic: the join order does not affect the value.
  FieldElement sum;
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace parallel
}  // namespace maschke
