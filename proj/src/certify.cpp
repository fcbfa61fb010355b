#include "maschke/certify.hpp"

#include <algorithm>
#include <unordered_set>

#include "maschke/errors.hpp"

namespace maschke {

bool verify_invariance(const Poly& f, const GeneratorSet& gens) {
  return std::all_of(gens.matrices.begin(), gens.matrices.end(),
                     [&f](const MatrixK& g) { return compose_linear(f, g) == f; });
}

std::int64_t molien_invariant_dimension(const GroupClosure& group, int degree, int workers) {
  if (degree < 0 || degree > kMaxMolienDegree) {
    throw DomainError("Molien degree must be in 0.." + std::to_string(kMaxMolienDegree));
  }
  if (group.order() == 0) throw PreconditionError("empty group");
  FieldElement sum = workers > 1 ? parallel::molien_sum(group.elements(), degree, workers)
                                 : serial::molien_sum(group.elements(), degree);
  FieldElement average = sum * Rational(1, static_cast<std::int64_t>(group.order()));
  if (!average.is_rational() || !average[FieldElement::kOne].is_integer() || average[FieldElement::kOne].sign() < 0) {
    throw NonIntegerResult("Molien average is " + average.to_string());
  }
  return std::stoll(average[FieldElement::kOne].numerator_string());
}

std::string SmoothnessCertificate::argument() const {
  std::string text =
      "The singular locus V(f, df/dx, df/dy, df/dz, df/dt) is closed in P^3 over Z and proper over Spec Z, so its "
      "image in Spec Z is closed. If the fibre over p is empty the image misses p, so it cannot contain the generic "
      "point, and the surface is smooth over Q and hence over C.";
  if (conclusive()) {
    text += " Fibre over p = " + std::to_string(prime) +
            ": f reduces to a diagonal form with nonzero coefficients and p does not divide the degree, so the "
            "gradient vanishes only at the origin over the algebraic closure of F_p; the scan of all " +
            std::to_string(points_scanned) + " F_p-points found no singular point, as it must.";
  } else if (scan_clean()) {
    text += " Fibre over p = " + std::to_string(prime) + ": no singular F_p-point among " +
            std::to_string(points_scanned) +
            " scanned, but the reduction is not diagonal, so singular points over extensions of F_p are not "
            "excluded. Inconclusive for this prime.";
  } else {
    text += " Fibre over p = " + std::to_string(prime) +
            ": a singular F_p-point exists. This says nothing about characteristic 0; try another prime.";
  }
  return text;
}

SmoothnessCertificate smoothness_certificate(const Poly& f, std::int64_t prime, int workers, int expected_degree) {
  if (!is_odd_prime(prime)) throw BadPrime(std::to_string(prime) + " is not an odd prime");
  if (f.is_zero() || f.degree() != expected_degree || !f.is_homogeneous()) {
    throw PreconditionError("smoothness certificate expects a homogeneous surface of degree " +
                            std::to_string(expected_degree) + " in x, y, z, t");
  }
  FpSingularSystem system = FpSingularSystem::from(f, prime);
  SingularScan scan = workers > 1 ? parallel::singular_scan(system, workers) : serial::singular_scan(system);

  SmoothnessCertificate cert;
  cert.prime = prime;
  cert.points_scanned = scan.points_scanned;
  cert.singular_witness = scan.first_singular;

  const auto& reduced = system.polys[0];
  if (reduced.terms.size() == 4 && expected_degree % prime != 0) {
    std::array<bool, 4> seen{};
    bool diagonal = true;
    for (const auto& [m, c] : reduced.terms) {
      auto it = std::find(m.exps.begin(), m.exps.end(), expected_degree);
      if (it == m.exps.end()) {
        diagonal = false;
        break;
      }
      seen[static_cast<std::size_t>(it - m.exps.begin())] = true;
    }
    cert.diagonal_reduction = diagonal && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }
  return cert;
}

std::int64_t miyaoka_bound(std::int64_t degree) {
  if (degree < 3) throw DomainError("Miyaoka bound needs degree >= 3");
  return 2 * degree * (degree - 2);
}

std::int64_t rams_bound(std::int64_t degree) {
  if (degree < 5) throw DomainError("record construction needs degree >= 5");
  return degree * (degree - 2) + 2;
}

DisjointFamilyCertificate verify_disjoint_family(std::span<const Line> lines, int workers) {
  std::unordered_set<Line> distinct(lines.begin(), lines.end());
  if (distinct.size() != lines.size()) throw PreconditionError("line family contains a repeated line");
  DisjointSweep sweep = workers > 1 ? parallel::disjoint_sweep(lines, workers) : serial::disjoint_sweep(lines);
  DisjointFamilyCertificate cert;
  cert.lines = lines.size();
  cert.pairs_checked = sweep.pairs_checked;
  cert.meeting_pairs = sweep.meeting_pairs;
  cert.witness = sweep.first_meeting;
  return cert;
}

IntersectionGraph build_intersection_graph(std::vector<Line> lines, int workers) {
  IntersectionGraph out;
  out.edges = workers > 1 ? parallel::meeting_pairs(lines, workers) : serial::meeting_pairs(lines);
  out.graph = Graph(lines.size());
  for (auto [u, v] : out.edges) out.graph.add_edge(u, v);
  out.vertices = std::move(lines);
  return out;
}

std::vector<Line> line_orbit(const GeneratorSet& gens, const Line& seed, std::size_t cap) {
  auto members = orbit(gens, seed, [](const MatrixK& g, const Line& l) { return act(g, l); }, cap);
  std::sort(members.begin(), members.end());
  return members;
}

LineCatalogue build_line_catalogue(const GeneratorSet& g31, const GeneratorSet& ab) {
  LineCatalogue cat;
  cat.orbit160 = line_orbit(g31, line_l160());
  cat.orbit192 = line_orbit(g31, line_l192());
  cat.family96 = line_orbit(ab, line_l192());
  cat.all352.reserve(cat.orbit160.size() + cat.orbit192.size());
  std::merge(cat.orbit160.begin(), cat.orbit160.end(), cat.orbit192.begin(), cat.orbit192.end(),
             std::back_inserter(cat.all352));
  cat.all352.erase(std::unique(cat.all352.begin(), cat.all352.end()), cat.all352.end());
  return cat;
}

}  // namespace maschke
