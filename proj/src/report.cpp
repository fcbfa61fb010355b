#include "maschke/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "maschke/errors.hpp"
#include "maschke/serialize.hpp"

namespace maschke {
namespace {

using nlohmann::json;

constexpr std::int64_t kOrderAB = 1152;
constexpr std::int64_t kOrderG31 = 46080;
constexpr std::size_t kOrbit160 = 160;
constexpr std::size_t kOrbit192 = 192;
constexpr std::size_t kFamily = 96;
constexpr std::int64_t kOcticDegree = 8;

// Multiplicative order of g, or 0 if it exceeds `limit`.
int element_order(const MatrixK& g, int limit = 24) {
  MatrixK power = g;
  for (int k = 1; k <= limit; ++k) {
    if (power.is_identity()) return k;
    power = power * g;
  }
  return 0;
}

json sizes_witness(std::size_t size, std::size_t expected, std::size_t group_order) {
  return {{"size", size}, {"expected", expected}, {"group_order", group_order},
          {"divides_group_order", group_order % size == 0}};
}

}  // namespace

bool CertificateReport::all_passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

const Claim* CertificateReport::find(std::string_view id) const {
  auto it = std::find_if(claims.begin(), claims.end(), [id](const Claim& c) { return c.id == id; });
  return it == claims.end() ? nullptr : &*it;
}

Verifier::Verifier(ReportConfig config) : config_(std::move(config)) {}

const GroupClosure& Verifier::g31_closure() {
  if (!g31_) g31_ = closure(config_.g31, {.cap = config_.group_cap, .shuffle_seed = std::nullopt});
  return *g31_;
}

const GroupClosure& Verifier::ab_closure() {
  if (!ab_) ab_ = closure(config_.ab, {.cap = config_.group_cap, .shuffle_seed = std::nullopt});
  return *ab_;
}

const std::vector<Line>& Verifier::orbit160() {
  if (!orbit160_) orbit160_ = line_orbit(config_.g31, line_l160(), config_.orbit_cap);
  return *orbit160_;
}

const std::vector<Line>& Verifier::orbit192() {
  if (!orbit192_) orbit192_ = line_orbit(config_.g31, line_l192(), config_.orbit_cap);
  return *orbit192_;
}

const std::vector<Line>& Verifier::family96() {
  if (!family96_) family96_ = line_orbit(config_.ab, line_l192(), config_.orbit_cap);
  return *family96_;
}

std::vector<Line> Verifier::all_lines() {
  std::vector<Line> all;
  std::merge(orbit160().begin(), orbit160().end(), orbit192().begin(), orbit192().end(), std::back_inserter(all));
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Claim Verifier::check(std::string_view id) {
  Claim c;
  c.id = std::string(id);
  auto start = std::chrono::steady_clock::now();
  try {
    c.witness = evaluate(id, c.passed);
  } catch (const std::exception& e) {
    c.passed = false;
    c.witness = {{"error", e.what()}};
  }
  c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return c;
}

Claim Verifier::check_molien(int degree) {
  Claim c;
  c.id = "molien-degree-" + std::to_string(degree);
  auto start = std::chrono::steady_clock::now();
  try {
    std::int64_t dim = molien_invariant_dimension(g31_closure(), degree, config_.workers);
    c.witness = {{"degree", degree}, {"dimension", dim}, {"group_order", g31_closure().order()}};
    c.passed = true;
    if (degree == 8 || degree == 1) {
      std::int64_t expected = degree == 8 ? 1 : 0;
      c.witness["expected"] = expected;
      c.passed = dim == expected;
    }
  } catch (const std::exception& e) {
    c.passed = false;
    c.witness = {{"error", e.what()}};
  }
  c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return c;
}

json Verifier::evaluate(std::string_view id, bool& passed) {
  const int workers = config_.workers;
  if (id == claim::kGeneratorsInvolutive) {
    json orders = json::object();
    passed = true;
    for (std::size_t k = 0; k < config_.g31.matrices.size(); ++k) {
      int order = element_order(config_.g31.matrices[k]);
      orders["s" + std::to_string(k + 1)] = order;
      passed = passed && order == 2;
    }
    return {{"orders", orders}};
  }
  if (id == claim::kClosureOrderAB || id == claim::kClosureOrderG31) {
    bool ab = id == claim::kClosureOrderAB;
    std::size_t order = ab ? ab_closure().order() : g31_closure().order();
    std::int64_t expected = ab ? kOrderAB : kOrderG31;
    passed = static_cast<std::int64_t>(order) == expected;
    return {{"order", order}, {"expected", expected}};
  }
  if (id == claim::kMembershipAB) {
    const auto& g = g31_closure();
    json members = json::object();
    passed = true;
    for (std::size_t k = 0; k < config_.ab.matrices.size(); ++k) {
      bool in = g.contains(config_.ab.matrices[k]);
      members[k == 0 ? "a" : k == 1 ? "b" : "g" + std::to_string(k)] = in;
      passed = passed && in;
    }
    return {{"contained", members}};
  }
  if (id == claim::kInvarianceG31 || id == claim::kInvarianceAB) {
    const GeneratorSet& gens = id == claim::kInvarianceG31 ? config_.g31 : config_.ab;
    json fixed = json::array();
    passed = true;
    for (const auto& g : gens.matrices) {
      bool ok = compose_linear(config_.f, g) == config_.f;
      fixed.push_back(ok);
      passed = passed && ok;
    }
    return {{"group", gens.name}, {"fixed_by_generator", fixed}};
  }
  if (id == claim::kMolienDegree8 || id == claim::kMolienDegree1) {
    Claim c = check_molien(id == claim::kMolienDegree8 ? 8 : 1);
    passed = c.passed;
    return c.witness;
  }
  if (id == claim::kOrbitSize160) {
    passed = orbit160().size() == kOrbit160;
    return sizes_witness(orbit160().size(), kOrbit160, g31_closure().order());
  }
  if (id == claim::kOrbitSize192) {
    passed = orbit192().size() == kOrbit192;
    return sizes_witness(orbit192().size(), kOrbit192, g31_closure().order());
  }
  if (id == claim::kOrbitPartition352) {
    std::vector<Line> common;
    std::set_intersection(orbit160().begin(), orbit160().end(), orbit192().begin(), orbit192().end(),
                          std::back_inserter(common));
    std::size_t total = all_lines().size();
    passed = common.empty() && total == kOrbit160 + kOrbit192;
    return {{"orbit160", orbit160().size()}, {"orbit192", orbit192().size()}, {"intersection", common.size()},
            {"union", total}};
  }
  if (id == claim::kLinesOnSurface) {
    auto lines = all_lines();
    std::size_t off = 0;
    json first_off;
    for (const auto& l : lines) {
      if (!line_on_surface(l, config_.f)) {
        if (off == 0) first_off = to_json(l);
        ++off;
      }
    }
    passed = off == 0 && lines.size() == kOrbit160 + kOrbit192;
    json w = {{"checked", lines.size()}, {"off_surface", off}};
    if (off > 0) w["first_off_surface"] = first_off;
    return w;
  }
  if (id == claim::kOrbitAB96) {
    const auto& fam = family96();
    bool subset = std::includes(orbit192().begin(), orbit192().end(), fam.begin(), fam.end());
    passed = fam.size() == kFamily && subset;
    return {{"size", fam.size()}, {"expected", kFamily}, {"subset_of_orbit192", subset},
            {"group_order", ab_closure().order()}};
  }
  if (id == claim::kDisjointFamily96) {
    const auto& fam = family96();
    auto cert = verify_disjoint_family(fam, workers);
    const std::uint64_t expected_pairs = kFamily * (kFamily - 1) / 2;
    passed = cert.passed() && fam.size() == kFamily && cert.pairs_checked == expected_pairs;
    json w = {{"lines", cert.lines}, {"pairs_checked", cert.pairs_checked}, {"meeting_pairs", cert.meeting_pairs}};
    if (cert.witness) {
      w["first_meeting_pair"] = {to_json(fam[cert.witness->first]), to_json(fam[cert.witness->second])};
    }
    return w;
  }
  if (id == claim::kSmoothness) {
    json attempts = json::array();
    passed = false;
    json w;
    std::string last_argument = "no prime was tried";
    for (auto p : config_.primes) {
      auto cert = smoothness_certificate(config_.f, p, workers);
      last_argument = cert.argument();
      json a = {{"prime", p}, {"points_scanned", cert.points_scanned}, {"scan_clean", cert.scan_clean()},
                {"diagonal_reduction", cert.diagonal_reduction}};
      if (cert.singular_witness) a["singular_point"] = *cert.singular_witness;
      attempts.push_back(a);
      if (cert.conclusive()) {
        passed = true;
        prime_ = p;
        w = {{"prime", p}, {"points_scanned", cert.points_scanned},
             {"expected_points", projective_point_count(p)}, {"argument", cert.argument()}};
        break;
      }
    }
    if (!passed) w = {{"argument", "No prime in the list gave a conclusive certificate. Last attempt: " + last_argument}};
    w["attempts"] = attempts;
    return w;
  }
  if (id == claim::kMiyaokaOptimal) {
    std::int64_t bound = miyaoka_bound(kOcticDegree);
    auto size = static_cast<std::int64_t>(family96().size());
    passed = bound == 2 * 8 * 6 && size == bound;
    return {{"degree", kOcticDegree}, {"bound", bound}, {"family_size", size}};
  }
  if (id == claim::kRamsRecord) {
    std::int64_t record = rams_bound(kOcticDegree);
    passed = record == 50;
    return {{"degree", kOcticDegree}, {"previous_record", record}, {"family_size", family96().size()}};
  }
  throw DomainError("unknown claim id '" + std::string(id) + "'");
}

CertificateReport Verifier::run(std::span<const std::string_view> ids) {
  CertificateReport report;
  for (auto id : ids) report.claims.push_back(check(id));
  report.prime = prime_;
  return report;
}

CertificateReport full_report(const ReportConfig& config) {
  Verifier v(config);
  return v.run(kClaimCatalogue);
}

json report_to_json(const CertificateReport& report) {
  json claims = json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}, {"millis", c.millis}});
  }
  json out = {{"claims", claims}, {"engine_version", report.engine_version}};
  out["prime"] = report.prime ? json(*report.prime) : json(nullptr);
  return out;
}

std::string report_to_text(const CertificateReport& report) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : report.claims) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " (" << c.millis << " ms)";
    if (c.witness.is_object()) {
      std::string summary;
      for (const auto& [key, value] : c.witness.items()) {
        if (key == "argument" || key == "attempts" || value.is_object() || (value.is_array() && value.size() > 8)) continue;
        if (!summary.empty()) summary += ", ";
        summary += key + "=" + value.dump();
      }
      if (!summary.empty()) os << "  " << summary;
    }
    os << "\n";
    passed += c.passed ? 1 : 0;
  }
  os << passed << "/" << report.claims.size() << " claims passed";
  if (report.prime) os << "; smoothness prime " << *report.prime;
  os << "\n";
  return os.str();
}

}  // namespace maschke
