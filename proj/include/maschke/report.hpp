#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "maschke/certify.hpp"

namespace maschke {

inline constexpr std::string_view kEngineVersion = "1.0.0";

// Fixed claim catalogue. full_report emits exactly these ids, in this order.
namespace claim {
inline constexpr std::string_view kGeneratorsInvolutive = "generators-involutive";
inline constexpr std::string_view kClosureOrderAB = "closure-order-ab";
inline constexpr std::string_view kClosureOrderG31 = "closure-order-g31";
inline constexpr std::string_view kMembershipAB = "membership-ab-in-g31";
inline constexpr std::string_view kInvarianceG31 = "invariance-g31";
inline constexpr std::string_view kInvarianceAB = "invariance-ab";
inline constexpr std::string_view kMolienDegree8 = "molien-degree-8";
inline constexpr std::string_view kMolienDegree1 = "molien-degree-1";
inline constexpr std::string_view kOrbitSize160 = "orbit-size-160";
inline constexpr std::string_view kOrbitSize192 = "orbit-size-192";
inline constexpr std::string_view kOrbitPartition352 = "orbits-partition-352";
inline constexpr std::string_view kLinesOnSurface = "lines-on-surface";
inline constexpr std::string_view kOrbitAB96 = "orbit-ab-96";
inline constexpr std::string_view kDisjointFamily96 = "disjoint-family-96";
inline constexpr std::string_view kSmoothness = "smoothness";
inline constexpr std::string_view kMiyaokaOptimal = "miyaoka-optimal";
inline constexpr std::string_view kRamsRecord = "rams-record";
}  // namespace claim

inline constexpr std::array<std::string_view, 17> kClaimCatalogue = {
    claim::kGeneratorsInvolutive, claim::kClosureOrderAB,    claim::kClosureOrderG31,  claim::kMembershipAB,
    claim::kInvarianceG31,        claim::kInvarianceAB,      claim::kMolienDegree8,    claim::kMolienDegree1,
    claim::kOrbitSize160,         claim::kOrbitSize192,      claim::kOrbitPartition352, claim::kLinesOnSurface,
    claim::kOrbitAB96,            claim::kDisjointFamily96,  claim::kSmoothness,       claim::kMiyaokaOptimal,
    claim::kRamsRecord,
};

struct Claim {
  std::string id;
  bool passed = false;
  nlohmann::json witness;
  std::int64_t millis = 0;
};

struct CertificateReport {
  std::vector<Claim> claims;
  std::optional<std::int64_t> prime;
  std::string engine_version{kEngineVersion};

  bool all_passed() const;
  const Claim* find(std::string_view id) const;
};

/// Inputs of the pipeline. Defaults are the octic and the built-in
/// generators; tests perturb them for negative controls.
struct ReportConfig {
  Poly f = build_maschke_f();
  GeneratorSet g31 = builtin_generators(BuiltinGroup::kG31);
  GeneratorSet ab = builtin_generators(BuiltinGroup::kAB);
  int workers = 1;
  std::vector<std::int64_t> primes = {5, 7, 11, 13, 17, 19, 23};
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t orbit_cap = kDefaultOrbitCap;
};

// Runs claims on demand, computing and caching closures and orbits the
// first time a claim needs them. Claim failures and errors never escape:
// they become failed claims with the error text as witness.
class Verifier {
 public:
  explicit Verifier(ReportConfig config = {});

  Claim check(std::string_view id);
  /// Molien dimension at any degree; only degrees 1 and 8 carry an expectation.
  Claim check_molien(int degree);
  CertificateReport run(std::span<const std::string_view> ids);

  const ReportConfig& config() const { return config_; }
  const GroupClosure& g31_closure();
  const GroupClosure& ab_closure();
  const std::vector<Line>& orbit160();
  const std::vector<Line>& orbit192();
  const std::vector<Line>& family96();
  std::vector<Line> all_lines();

 private:
  nlohmann::json evaluate(std::string_view id, bool& passed);

  ReportConfig config_;
  std::optional<GroupClosure> g31_;
  std::optional<GroupClosure> ab_;
  std::optional<std::vector<Line>> orbit160_;
  std::optional<std::vector<Line>> orbit192_;
  std::optional<std::vector<Line>> family96_;
  std::optional<std::int64_t> prime_;
};

/// Every catalogue claim, in catalogue order; always completes.
CertificateReport full_report(const ReportConfig& config = {});

nlohmann::json report_to_json(const CertificateReport& report);
std::string report_to_text(const CertificateReport& report);

}  // namespace maschke
