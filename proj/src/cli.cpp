#include "maschke/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "maschke/report.hpp"
#include "maschke/serialize.hpp"

namespace maschke {
namespace {

using nlohmann::json;

struct CliConfig {
  std::string command;
  std::optional<std::int64_t> prime;
  int degree = 8;
  std::int64_t budget_ms = 10000;
  int workers = 1;
  std::string output;
  std::string format = "text";
  std::string which = "all352";
  std::size_t target = 96;
};

int default_workers() {
#ifdef _OPENMP
  return std::max(1, omp_get_max_threads());
#else
  return 1;
#endif
}

// Emits `body` to --output or to `out`. Returns false on I/O failure.
bool emit(const CliConfig& cfg, const std::string& body, std::ostream& out, std::ostream& err) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << body;
    return static_cast<bool>(out);
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << cfg.output << "' for writing\n";
    return false;
  }
  file << body;
  if (!file) {
    err << "error: write to '" << cfg.output << "' failed\n";
    return false;
  }
  return true;
}

int finish(const CliConfig& cfg, const CertificateReport& report, const std::string& text, std::ostream& out,
           std::ostream& err) {
  std::string body = cfg.format == "json" ? report_to_json(report).dump(2) + "\n" : text;
  if (!emit(cfg, body, out, err)) return kExitClaimFailed;
  return report.all_passed() ? kExitPass : kExitClaimFailed;
}

int run_report(const CliConfig& cfg, std::span<const std::string_view> ids, std::ostream& out, std::ostream& err) {
  ReportConfig rc;
  rc.workers = cfg.workers;
  if (cfg.prime) rc.primes = {*cfg.prime};
  Verifier v(rc);
  CertificateReport report = v.run(ids);
  return finish(cfg, report, report_to_text(report), out, err);
}

int run_disjoint(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ReportConfig rc;
  rc.workers = cfg.workers;
  Verifier v(rc);
  const std::array ids{claim::kDisjointFamily96};
  CertificateReport report = v.run(ids);
  const Claim& c = report.claims.front();
  std::ostringstream text;
  if (c.witness.contains("pairs_checked")) {
    text << c.witness["pairs_checked"].get<std::uint64_t>() << " pairs checked, ";
    auto meeting = c.witness["meeting_pairs"].get<std::uint64_t>();
    if (meeting == 0) {
      text << "all disjoint\n";
    } else {
      text << meeting << " meeting pairs\n";
    }
  } else {
    text << "disjointness check failed: " << c.witness.dump() << "\n";
  }
  return finish(cfg, report, text.str(), out, err);
}

int run_smoothness(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ReportConfig rc;
  rc.workers = cfg.workers;
  if (cfg.prime) rc.primes = {*cfg.prime};
  Verifier v(rc);
  const std::array ids{claim::kSmoothness};
  CertificateReport report = v.run(ids);
  const Claim& c = report.claims.front();
  std::ostringstream text;
  if (c.witness.contains("attempts")) {
    for (const auto& a : c.witness["attempts"]) {
      text << "p = " << a["prime"].get<std::int64_t>() << ": " << a["points_scanned"].get<std::uint64_t>()
           << " points scanned, ";
      if (a.contains("singular_point")) {
        text << "singular point " << a["singular_point"].dump();
      } else {
        text << "no singular point";
        text << (a["diagonal_reduction"].get<bool>() ? " (diagonal reduction: conclusive)" : " (inconclusive)");
      }
      text << "\n";
    }
  }
  if (c.witness.contains("argument")) text << c.witness["argument"].get<std::string>() << "\n";
  text << (c.passed ? "smooth: certified\n" : "smooth: not certified\n");
  return finish(cfg, report, text.str(), out, err);
}

int run_molien(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ReportConfig rc;
  rc.workers = cfg.workers;
  Verifier v(rc);
  CertificateReport report;
  report.claims.push_back(v.check_molien(cfg.degree));
  const Claim& c = report.claims.front();
  std::ostringstream text;
  if (c.witness.contains("dimension")) {
    text << "degree " << cfg.degree << ": " << c.witness["dimension"].get<std::int64_t>()
         << " independent invariant(s) of G31\n";
  } else {
    text << "Molien computation failed: " << c.witness.dump() << "\n";
  }
  return finish(cfg, report, text.str(), out, err);
}

int run_export(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ReportConfig rc;
  rc.workers = cfg.workers;
  Verifier v(rc);
  std::vector<Line> lines;
  if (cfg.which == "orbit160") {
    lines = v.orbit160();
  } else if (cfg.which == "orbit192") {
    lines = v.orbit192();
  } else if (cfg.which == "family96") {
    lines = v.family96();
  } else {
    lines = v.all_lines();
  }
  if (!emit(cfg, lines_to_json(lines).dump(1) + "\n", out, err)) return kExitClaimFailed;
  return kExitPass;
}

int run_search(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ReportConfig rc;
  rc.workers = cfg.workers;
  Verifier v(rc);
  IntersectionGraph graph = build_intersection_graph(v.all_lines(), cfg.workers);
  if (cfg.target > graph.vertices.size()) {
    err << "error: --target " << cfg.target << " exceeds the " << graph.vertices.size() << " vertices\n";
    return kExitUsage;
  }
  SearchOptions options;
  options.budget = std::chrono::milliseconds(cfg.budget_ms);
  SearchStats stats;
  auto start = std::chrono::steady_clock::now();
  auto found = independent_set_search(graph.graph, cfg.target, options, &stats);
  auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  CertificateReport report;
  Claim c;
  c.id = "independent-set-" + std::to_string(cfg.target);
  c.passed = found.has_value();
  c.millis = millis;
  c.witness = {{"target", cfg.target},       {"vertices", graph.vertices.size()}, {"edges", graph.edges.size()},
               {"best_size", stats.best_size}, {"greedy_rounds", stats.greedy_rounds}, {"nodes", stats.nodes},
               {"budget_ms", cfg.budget_ms}};
  if (found) {
    c.witness["independent_set"] = *found;
    std::vector<Line> family;
    for (auto idx : *found) family.push_back(graph.vertices[idx]);
    c.witness["pairwise_disjoint"] = verify_disjoint_family(family, cfg.workers).passed();
  }
  report.claims.push_back(c);
  std::ostringstream text;
  if (found) {
    text << "found " << found->size() << " pairwise disjoint lines among " << graph.vertices.size() << " ("
         << graph.edges.size() << " meeting pairs)\n";
  } else {
    text << "no independent set of size " << cfg.target << " found within " << cfg.budget_ms
         << " ms (best " << stats.best_size << "); this is not a proof of nonexistence\n";
  }
  return finish(cfg, report, text.str(), out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the lines on the Maschke octic", "maschke-verify"};
  app.require_subcommand(1);
  CliConfig cfg;
  cfg.workers = default_workers();

  app.add_option("--prime", cfg.prime, "odd prime for the smoothness scan")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            try {
              return is_odd_prime(std::stoll(s)) ? std::string() : s + " is not an odd prime";
            } catch (const std::exception&) {
              return s + " is not an integer";
            }
          },
          "ODD_PRIME"));
  app.add_option("--degree", cfg.degree, "degree for the Molien dimension")->check(CLI::Range(0, kMaxMolienDegree));
  app.add_option("--budget-ms", cfg.budget_ms, "time budget of the independent-set search")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "OpenMP worker count")->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "write the report to this path instead of stdout");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--target", cfg.target, "independent-set size to look for");

  auto* verify_all = app.add_subcommand("verify-all", "run every claim and print the certificate report");
  auto* group_order = app.add_subcommand("group-order", "orders of <a,b> and G31, and a, b in G31");
  auto* orbits = app.add_subcommand("orbits", "orbit sizes 160, 192, 96 and their relations");
  auto* disjoint = app.add_subcommand("disjoint", "pairwise disjointness of the 96-line family");
  auto* smoothness = app.add_subcommand("smoothness", "finite-field smoothness certificate");
  auto* molien = app.add_subcommand("molien", "dimension of degree-d invariants of G31");
  auto* export_lines = app.add_subcommand("export-lines", "write a line set as JSON");
  export_lines->add_option("which", cfg.which, "orbit160, orbit192, family96 or all352")
      ->check(CLI::IsMember({"orbit160", "orbit192", "family96", "all352"}));
  auto* search = app.add_subcommand("search-independent", "best-effort search for pairwise disjoint lines");
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify_all->parsed()) return run_report(cfg, kClaimCatalogue, out, err);
    if (group_order->parsed()) {
      const std::array ids{claim::kClosureOrderAB, claim::kClosureOrderG31, claim::kMembershipAB};
      return run_report(cfg, ids, out, err);
    }
    if (orbits->parsed()) {
      const std::array ids{claim::kOrbitSize160, claim::kOrbitSize192, claim::kOrbitPartition352, claim::kOrbitAB96};
      return run_report(cfg, ids, out, err);
    }
    if (disjoint->parsed()) return run_disjoint(cfg, out, err);
    if (smoothness->parsed()) return run_smoothness(cfg, out, err);
    if (molien->parsed()) return run_molien(cfg, out, err);
    if (export_lines->parsed()) return run_export(cfg, out, err);
    if (search->parsed()) return run_search(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitClaimFailed;
  }
  err << "usage error: no command given\n";
  return kExitUsage;
}

}  // namespace maschke
