#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootspin/certs.hpp"
#include "rootspin/lattice.hpp"
#include "rootspin/rootsys.hpp"
#include "rootspin/sigsum.hpp"

namespace rootspin {

enum class MethodChoice { Auto, Brute, Mitm };
MethodChoice parse_method(const std::string& text);

// Exit statuses shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;

struct AnalyzeOptions {
  MethodChoice method = MethodChoice::Auto;
  // Exact counting limit on r; unset means 48 (26 for --method brute).
  std::optional<std::size_t> max_r;
  unsigned threads = 1;
  std::size_t memory_budget = kDefaultMemoryBudget;
};

struct Timings {
  std::chrono::nanoseconds obstruction{0};
  std::chrono::nanoseconds certificate{0};
  std::chrono::nanoseconds count{0};
  std::chrono::nanoseconds total{0};
  std::size_t memory_peak = 0;
};

struct AnalysisReport {
  FamilyRank id;
  std::size_t r = 0;
  std::size_t ambient_dim = 0;
  std::int64_t denominator = 1;
  bool exists = false;
  ObstructionResult obstruction;
  CountResult count;
  std::optional<CertificateFamily> certificate;
  std::optional<SignVector> witness;
  Timings timings;
  int exit_code = kExitOk;
  std::vector<std::string> problems;  // diagnostics behind a nonzero exit code
};

// Obstruction, then certificate, then counting within the limits. Never
// throws for admissible ids; failures are reflected in exit_code/problems.
// Throws InvalidRank for inadmissible ids.
AnalysisReport analyze(const FamilyRank& id, const AnalyzeOptions& options = {});

// Key-sorted JSON; `timings` is the only run-dependent member.
nlohmann::json to_json(const AnalysisReport& report, bool with_timings = true);
nlohmann::json certificate_json(const std::optional<CertificateFamily>& cert);
nlohmann::json count_json(const CountResult& count);
nlohmann::json u128_json(u128 value);

// Families covered by the `table` command, in output order.
std::vector<FamilyRank> table_ids();

// Plain-text table grouped like the classification statement.
std::string format_table(const std::vector<AnalysisReport>& reports);

}  // namespace rootspin
