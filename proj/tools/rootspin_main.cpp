// rootspin: zero signed sums of positive roots and the invariant spinors
// they count.
//
//   rootspin roots   <family> <rank>
//   rootspin analyze <family> <rank> [--method auto|brute|mitm] [--max-r N] [--json]
//   rootspin count   <family> <rank> [--method auto|brute|mitm] [--max-r N]
//   rootspin certify <family> <rank>
//   rootspin oracle  <family> <rank> [--max-r N]
//   rootspin table   [--json]
//
// Every command takes --threads N (fallback: $ROOTSPIN_THREADS). JSON goes to
// stdout, diagnostics to stderr. Exit codes: 0 ok, 1 internal invariant
// violation, 2 invalid input, 3 resource limit.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootspin/certs.hpp"
#include "rootspin/errors.hpp"
#include "rootspin/report.hpp"
#include "rootspin/rootsys.hpp"
#include "rootspin/sigsum.hpp"
#include "rootspin/spinor.hpp"

namespace {

using namespace rootspin;
using Clock = std::chrono::steady_clock;

struct Target {
  std::string family;
  int rank = 0;

  FamilyRank id() const {
    FamilyRank id{parse_family(family), rank};
    require_admissible(id);
    return id;
  }
};

void add_target(CLI::App* cmd, Target& target) {
  cmd->add_option("family", target.family, "Lie algebra family (A-G)")->required();
  cmd->add_option("rank", target.rank, "rank")->required();
}

unsigned env_threads() {
  if (const char* value = std::getenv("ROOTSPIN_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(value));
    } catch (const std::exception&) {
      std::cerr << "ignoring ROOTSPIN_THREADS=" << value << '\n';
    }
  }
  return 0;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int report_exit(const AnalysisReport& report) {
  for (const auto& problem : report.problems) std::cerr << "rootspin: " << problem << '\n';
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero signed sums of positive roots and invariant spinors on maximal flag manifolds"};
  app.require_subcommand(1);

  std::optional<unsigned> threads_flag;
  app.add_option("--threads", threads_flag, "worker threads (0 = all cores)");

  Target target;
  std::string method = "auto";
  std::optional<std::size_t> max_r;
  bool json = false;

  auto* roots = app.add_subcommand("roots", "print the ordered positive roots");
  add_target(roots, target);

  auto* analyze_cmd = app.add_subcommand("analyze", "obstruction, certificate and count");
  add_target(analyze_cmd, target);
  analyze_cmd->add_option("--method", method, "auto, brute or mitm");
  analyze_cmd->add_option("--max-r", max_r, "largest r counted exactly (default 48)");
  analyze_cmd->add_flag("--json", json, "emit JSON");

  auto* count_cmd = app.add_subcommand("count", "exact count of zero signed sums");
  add_target(count_cmd, target);
  count_cmd->add_option("--method", method, "auto, brute or mitm");
  count_cmd->add_option("--max-r", max_r, "largest r counted exactly");

  auto* certify = app.add_subcommand("certify", "emit the verified certificate");
  add_target(certify, target);

  auto* oracle = app.add_subcommand("oracle", "invariant dimension from the Clifford model");
  add_target(oracle, target);
  oracle->add_option("--max-r", max_r, "largest r for the 2^r-dimensional model (default 14)");

  auto* table = app.add_subcommand("table", "results for the built-in list of algebras");
  table->add_flag("--json", json, "emit JSON");

  for (auto* cmd : {roots, analyze_cmd, count_cmd, certify, oracle, table}) {
    cmd->add_option("--threads", threads_flag, "worker threads (0 = all cores)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  const unsigned threads = threads_flag.value_or(env_threads());

  try {
    if (*roots) {
      write_root_list(std::cout, positive_roots(target.id()));
      return kExitOk;
    }

    if (*analyze_cmd) {
      AnalyzeOptions options;
      options.method = parse_method(method);
      options.max_r = max_r;
      options.threads = threads;
      const AnalysisReport report = analyze(target.id(), options);
      if (json) {
        print_json(to_json(report));
      } else {
        std::cout << format_table({report});
      }
      return report_exit(report);
    }

    if (*count_cmd) {
      const FamilyRank id = target.id();
      const RootSystem system = positive_roots(id);
      const MethodChoice choice = parse_method(method);
      CountOptions options;
      options.threads = threads;
      const bool brute = choice == MethodChoice::Brute ||
                         (choice == MethodChoice::Auto && system.size() <= 20);
      options.limit_r = max_r.value_or(brute ? kDefaultBruteForceLimit : kDefaultMitmLimit);
      const CountResult result = brute ? count_bruteforce(system, options) : count_mitm(system, options);
      print_json({{"family", std::string(1, family_letter(id.family))},
                  {"rank", id.rank},
                  {"r", system.size()},
                  {"count", count_json(result)},
                  {"method", to_string(result.method)},
                  {"timings",
                   {{"count_ms", result.elapsed.count() / 1e6},
                    {"memory_peak_bytes", result.memory_peak}}}});
      return result.value % 2 == 0 ? kExitOk : kExitInternal;
    }

    if (*certify) {
      const FamilyRank id = target.id();
      const auto cert = certificate(id);
      if (cert) {
        const Verification check = verify(positive_roots(id), *cert);
        if (!check) {
          std::cerr << "rootspin: certificate failed to verify: " << check.diagnostic << '\n';
          return kExitInternal;
        }
      }
      nlohmann::json out = certificate_json(cert);
      out["family"] = std::string(1, family_letter(id.family));
      out["rank"] = id.rank;
      print_json(out);
      return kExitOk;
    }

    if (*oracle) {
      const FamilyRank id = target.id();
      const RootSystem system = positive_roots(id);
      const auto start = Clock::now();
      const auto dimension = invariant_dimension(system, max_r.value_or(kDefaultOracleLimit), threads);
      print_json({{"family", std::string(1, family_letter(id.family))},
                  {"rank", id.rank},
                  {"r", system.size()},
                  {"dimension", dimension},
                  {"timings", {{"oracle_ms", ms_since(start)}}}});
      return kExitOk;
    }

    if (*table) {
      AnalyzeOptions options;
      options.threads = threads;
      std::vector<AnalysisReport> reports;
      int status = kExitOk;
      for (const auto& id : table_ids()) {
        reports.push_back(analyze(id, options));
        if (reports.back().exit_code != kExitOk) status = std::max(status, report_exit(reports.back()));
      }
      if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& report : reports) rows.push_back(to_json(report));
        print_json(rows);
      } else {
        std::cout << format_table(reports);
      }
      return status;
    }
  } catch (const InvalidRank& e) {
    std::cerr << "rootspin: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceLimit& e) {
    std::cerr << "rootspin: " << e.what() << '\n';
    return kExitResource;
  } catch (const CountOverflow& e) {
    std::cerr << "rootspin: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    // parse_method and friends
    std::cerr << "rootspin: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "rootspin: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInvalid;
}
