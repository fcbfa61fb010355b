// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <unordered_set>

#include "maschke/certify.hpp"
#include "maschke/errors.hpp"
#include "maschke/report.hpp"
#include "test_support.hpp"

using namespace maschke;
using namespace maschke::testing;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

const GroupClosure& ab_closure() {
  static const GroupClosure g = closure(ab_generators());
  return g;
}

const LineCatalogue& catalogue() {
  static const LineCatalogue cat = build_line_catalogue();
  return cat;
}

Outcome group_orders() {
  GeneratorSet permuted = g31_generators();
  std::reverse(permuted.matrices.begin(), permuted.matrices.end());
  std::size_t oracle = closure(permuted, {.cap = kDefaultGroupCap, .shuffle_seed = 4242}).order();
  std::size_t g31 = g31_closure().order();
  std::size_t ab = ab_closure().order();
  std::ostringstream s;
  s << "|<a,b>| = " << ab << ", |G31| = " << g31 << " (shuffled rerun " << oracle << ")";
  return {ab == 1152 && g31 == 46080 && oracle == g31, s.str()};
}

Outcome membership() {
  const auto& g = g31_closure();
  bool ok = g.contains(ab_generators().matrices[0]) && g.contains(ab_generators().matrices[1]);
  return {ok, "a, b in G31"};
}

Outcome involutions() {
  bool ok = true;
  for (const auto& s : g31_generators().matrices) ok = ok && (s * s).is_identity() && !s.is_identity();
  return {ok, "s1^2 = ... = s5^2 = I"};
}

Outcome invariance() {
  Poly f = build_maschke_f();
  bool ok = true;
  for (const auto& g : g31_generators().matrices) ok = ok && compose_linear(f, g) == f;
  for (const auto& g : ab_generators().matrices) ok = ok && compose_linear(f, g) == f;
  return {ok, "f o g = f for s1..s5, a, b"};
}

Outcome molien() {
  auto d8 = molien_invariant_dimension(g31_closure(), 8);
  auto d1 = molien_invariant_dimension(g31_closure(), 1);
  std::ostringstream s;
  s << "dim degree 8 = " << d8 << ", dim degree 1 = " << d1;
  return {d8 == 1 && d1 == 0, s.str()};
}

Outcome orbit_sizes() {
  const auto& cat = catalogue();
  std::unordered_set<Line> o160(cat.orbit160.begin(), cat.orbit160.end());
  bool disjoint = true;
  for (const auto& l : cat.orbit192) disjoint = disjoint && o160.count(l) == 0;
  std::unordered_set<Line> all(cat.all352.begin(), cat.all352.end());
  std::ostringstream s;
  s << cat.orbit160.size() << " + " << cat.orbit192.size() << " = " << all.size();
  return {cat.orbit160.size() == 160 && cat.orbit192.size() == 192 && disjoint && all.size() == 352, s.str()};
}

Outcome incidence() {
  Poly f = build_maschke_f();
  std::size_t on = 0;
  for (const auto& l : catalogue().all352) on += line_on_surface(l, f) ? 1 : 0;
  std::ostringstream s;
  s << on << "/352 lines on the surface";
  return {on == 352, s.str()};
}

Outcome main_theorem() {
  const auto& cat = catalogue();
  std::unordered_set<Line> o192(cat.orbit192.begin(), cat.orbit192.end());
  bool subset = true;
  for (const auto& l : cat.family96) subset = subset && o192.count(l) == 1;
  auto cert = verify_disjoint_family(cat.family96);
  std::ostringstream s;
  s << cat.family96.size() << " lines, " << cert.pairs_checked << " pairs, " << cert.meeting_pairs << " meeting";
  if (cert.witness) s << " (first " << cert.witness->first << ", " << cert.witness->second << ")";
  return {cat.family96.size() == 96 && subset && cert.pairs_checked == 4560 && cert.passed(), s.str()};
}

Outcome bounds() {
  std::ostringstream s;
  s << "miyaoka(8) = " << miyaoka_bound(8) << ", rams(8) = " << rams_bound(8);
  bool ok = miyaoka_bound(8) == 96 && miyaoka_bound(8) == static_cast<std::int64_t>(catalogue().family96.size()) &&
            rams_bound(8) == 50;
  return {ok, s.str()};
}

Outcome smoothness() {
  Poly f = build_maschke_f();
  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    auto cert = smoothness_certificate(f, p);
    if (cert.conclusive()) {
      std::ostringstream s;
      s << "p = " << p << ", " << cert.points_scanned << " points, no singular point";
      return {cert.points_scanned == static_cast<std::uint64_t>(p * p * p + p * p + p + 1), s.str()};
    }
  }
  return {false, "no prime in the list gave a certificate"};
}

Outcome negative_controls() {
  Poly perturbed = build_maschke_f() + sigma4(Monomial{{4, 4, 0, 0}});
  bool coeff_caught = perturbed.coefficient(Monomial{{4, 4, 0, 0}}) == FieldElement(15) &&
                      !verify_invariance(perturbed, g31_generators());

  std::vector<Line> dup = catalogue().family96;
  dup.push_back(dup.front());
  bool dup_caught = false;
  try {
    (void)verify_disjoint_family(dup);
  } catch (const PreconditionError&) {
    dup_caught = true;
  }

  std::vector<Line> pair{line_l160(), act(g31_generators().matrices[4], line_l160())};
  bool meet_caught = !lines_disjoint(pair[0], pair[1]) && !verify_disjoint_family(pair).passed();

  std::ostringstream s;
  s << "14->15 " << (coeff_caught ? "rejected" : "MISSED") << ", duplicate " << (dup_caught ? "rejected" : "MISSED")
    << ", L160 vs s5 L160 " << (meet_caught ? "meet" : "MISSED");
  return {coeff_caught && dup_caught && meet_caught, s.str()};
}

Outcome properties() {
  std::mt19937_64 rng(20261016);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    FieldElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
              a * (b + c) == a * b + a * c && (a - a).is_zero();
    if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one();
    failures += ok ? 0 : 1;
  }

  Poly f = build_maschke_f();
  Poly euler;
  for (int k = 0; k < 4; ++k) euler += Poly::variable(k) * partial_derivative(f, k);
  bool euler_ok = euler == FieldElement(8) * f;

  int rref_failures = 0;
  for (const auto& l : catalogue().all352) rref_failures += Line::from_span(l.row(0), l.row(1)) == l ? 0 : 1;

  int hom_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    MatrixK g = random_word(g31_generators(), 1 + trial % 6, rng);
    MatrixK h = random_word(g31_generators(), 1 + (trial / 6) % 6, rng);
    const Line& l = catalogue().all352[static_cast<std::size_t>(trial * 7) % 352];
    hom_failures += act(g * h, l) == act(g, act(h, l)) ? 0 : 1;
  }

  std::ostringstream s;
  s << "field axioms 1000 triples, Euler identity, RREF idempotence 352 lines, act homomorphism 100 samples";
  if (failures + rref_failures + hom_failures > 0 || !euler_ok) {
    s << " [" << failures << " axiom, " << rref_failures << " rref, " << hom_failures << " act failures"
      << (euler_ok ? "" : ", Euler failed") << "]";
  }
  return {failures == 0 && euler_ok && rref_failures == 0 && hom_failures == 0, s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"group orders", group_orders},
      {"membership", membership},
      {"generator involutivity", involutions},
      {"invariance", invariance},
      {"Molien dimension", molien},
      {"orbit sizes", orbit_sizes},
      {"incidence", incidence},
      {"96 disjoint lines", main_theorem},
      {"optimality", bounds},
      {"smoothness", smoothness},
      {"negative controls", negative_controls},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first << ": " << o.detail
              << " (" << ms << " ms)\n";
    failed += o.passed ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
