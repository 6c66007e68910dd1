#include "rootspin/report.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "rootspin/errors.hpp"

namespace rootspin {

using Clock = std::chrono::steady_clock;

namespace {

std::chrono::nanoseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

void fail(AnalysisReport& report, int code, std::string problem) {
  // An internal invariant violation outranks a resource limit.
  if (report.exit_code == kExitOk || code == kExitInternal) report.exit_code = code;
  report.problems.push_back(std::move(problem));
}

const char* item_heading(Family family) {
  switch (family) {
    case Family::A: return "(1) A_n, n >= 1: invariant spinors iff n is even; dim >= 2^floor(n/2)";
    case Family::B: return "(2) B_n, n >= 2: no invariant spinors";
    case Family::C: return "(3) C_n, n >= 3: invariant spinors iff n = 0,3 mod 4; dim >= 2^floor((n+1)/4)";
    case Family::D: return "(4) D_n, n >= 4: invariant spinors iff n = 0,1 mod 4; dim >= 2^floor((n+1)/4)";
    case Family::E: return "(5)-(7) E_6: dim 13697920; E_7: none; E_8: dim >= 369600";
    case Family::F: return "(8) F_4: dim 34432";
    case Family::G: return "(9) G_2: dim 4";
  }
  return "";
}

}  // namespace

MethodChoice parse_method(const std::string& text) {
  if (text == "auto") return MethodChoice::Auto;
  if (text == "brute") return MethodChoice::Brute;
  if (text == "mitm") return MethodChoice::Mitm;
  throw Error("unknown method '" + text + "' (expected auto, brute or mitm)");
}

AnalysisReport analyze(const FamilyRank& id, const AnalyzeOptions& options) {
  const auto start = Clock::now();
  const RootSystem system = positive_roots(id);

  AnalysisReport report;
  report.id = id;
  report.r = system.size();
  report.ambient_dim = system.ambient_dim;
  report.denominator = system.denominator;

  auto t = Clock::now();
  report.obstruction = obstruction_2L(system);
  report.timings.obstruction = since(t);

  t = Clock::now();
  report.certificate = certificate(id);
  if (report.certificate) {
    const Verification check = verify(system, *report.certificate);
    if (!check) fail(report, kExitInternal, "certificate failed to verify: " + check.diagnostic);
  }
  report.timings.certificate = since(t);

  CountOptions count_options;
  count_options.threads = options.threads;
  count_options.memory_budget = options.memory_budget;
  const std::size_t default_limit =
      options.method == MethodChoice::Brute ? kDefaultBruteForceLimit : kDefaultMitmLimit;
  const std::size_t limit = options.max_r.value_or(default_limit);
  count_options.limit_r = limit;

  // Existence.
  if (!report.obstruction.pass) {
    report.exists = false;
    if (report.certificate) {
      fail(report, kExitInternal, "obstruction fails but a certificate exists");
    }
  } else if (report.certificate) {
    report.exists = true;
    report.witness = report.certificate->assemble();
  } else if (system.size() <= limit) {
    // Obstruction passes without a certificate: settle existence by search.
    try {
      const Existence e = exists_strong_dependence(system, count_options);
      report.exists = e.exists;
      report.witness = e.witness;
    } catch (const ResourceLimit& error) {
      fail(report, kExitResource, error.what());
    }
  } else {
    fail(report, kExitResource, "existence undecided: obstruction passes, no certificate, r > max-r");
  }

  // Counting.
  t = Clock::now();
  const u128 bound = lower_bound(id);
  if (!report.exists && !report.obstruction.pass) {
    report.count.kind = CountKind::Zero;
    report.count.method = CountMethod::Obstruction;
  } else if (system.size() > limit && options.method == MethodChoice::Auto) {
    report.count.kind = report.exists ? CountKind::LowerBound : CountKind::Zero;
    report.count.method = CountMethod::Certificate;
    report.count.value = report.exists ? bound : 0;
  } else {
    try {
      const bool brute = options.method == MethodChoice::Brute ||
                         (options.method == MethodChoice::Auto && system.size() <= 20);
      report.count = brute ? count_bruteforce(system, count_options)
                           : count_mitm(system, count_options);
      if (report.count.value == 0) report.count.kind = CountKind::Zero;
    } catch (const ResourceLimit& error) {
      fail(report, kExitResource, error.what());
      report.count.kind = report.exists ? CountKind::LowerBound : CountKind::Zero;
      report.count.method = CountMethod::Certificate;
      report.count.value = report.exists ? bound : 0;
    } catch (const CountOverflow& error) {
      fail(report, kExitInternal, error.what());
    }
  }
  report.timings.count = since(t);
  report.timings.memory_peak = report.count.memory_peak;

  // Cross-checks between the independent routes; mismatches are reported,
  // never reconciled.
  const bool counted = report.count.method == CountMethod::BruteForce ||
                       report.count.method == CountMethod::MeetInMiddle;
  if (counted) {
    const u128 value = report.count.value;
    if (value % 2 != 0) fail(report, kExitInternal, "exact count is odd");
    if (report.exists && value == 0) {
      fail(report, kExitInternal, "a zero signed sum is known but the count is zero");
    }
    if (!report.exists && value != 0) {
      fail(report, kExitInternal, "count is positive but existence was not established");
    }
    if (value < bound) fail(report, kExitInternal, "exact count is below the known lower bound");
    if (report.certificate && value < report.certificate->certified_bound()) {
      fail(report, kExitInternal, "exact count is below the certificate bound");
    }
  }
  if (!report.exists && report.obstruction.pass && report.exit_code == kExitOk) {
    fail(report, kExitInternal, "no zero signed sum although the obstruction passes");
  }
  report.timings.total = since(start);
  return report;
}

nlohmann::json u128_json(u128 value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return to_string(value);
}

nlohmann::json count_json(const CountResult& count) {
  switch (count.kind) {
    case CountKind::Zero: return {{"zero", true}};
    case CountKind::LowerBound: return {{"lower_bound", u128_json(count.value)}};
    case CountKind::ExistsOnly: return {{"exists_only", true}};
    case CountKind::Exact: break;
  }
  return {{"exact", u128_json(count.value)}};
}

nlohmann::json certificate_json(const std::optional<CertificateFamily>& cert) {
  if (!cert) return {{"available", false}};
  nlohmann::json blocks = nlohmann::json::array();
  nlohmann::json names = nlohmann::json::array();
  for (const auto& block : cert->blocks) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : block.terms) {
      terms.push_back({{"root_index", term.root_index}, {"sign", term.sign}});
    }
    blocks.push_back(std::move(terms));
    names.push_back(block.name);
  }
  nlohmann::json alternates = nlohmann::json::array();
  for (const auto& eps : cert->alternates) alternates.push_back(eps.str());
  return {{"available", true},
          {"block_names", std::move(names)},
          {"blocks", std::move(blocks)},
          {"alternates", std::move(alternates)},
          {"certified_bound", u128_json(cert->certified_bound())},
          {"witness", cert->assemble().str()}};
}

nlohmann::json to_json(const AnalysisReport& report, bool with_timings) {
  nlohmann::json out;
  out["family"] = std::string(1, family_letter(report.id.family));
  out["rank"] = report.id.rank;
  out["r"] = report.r;
  out["ambient_dim"] = report.ambient_dim;
  out["denominator"] = report.denominator;
  out["exists"] = report.exists;
  out["obstruction"] = report.obstruction.pass ? "pass" : "fail";
  out["count"] = count_json(report.count);
  out["method"] = to_string(report.count.method);
  out["certificate"] = certificate_json(report.certificate);
  if (with_timings) {
    out["timings"] = {{"obstruction_ms", report.timings.obstruction.count() / 1e6},
                      {"certificate_ms", report.timings.certificate.count() / 1e6},
                      {"count_ms", report.timings.count.count() / 1e6},
                      {"total_ms", report.timings.total.count() / 1e6},
                      {"memory_peak_bytes", report.timings.memory_peak}};
  }
  return out;
}

std::vector<FamilyRank> table_ids() {
  std::vector<FamilyRank> ids;
  for (int n = 1; n <= 8; ++n) ids.push_back({Family::A, n});
  for (int n = 2; n <= 6; ++n) ids.push_back({Family::B, n});
  for (int n = 3; n <= 8; ++n) ids.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) ids.push_back({Family::D, n});
  ids.push_back({Family::E, 6});
  ids.push_back({Family::E, 7});
  ids.push_back({Family::E, 8});
  ids.push_back({Family::F, 4});
  ids.push_back({Family::G, 2});
  return ids;
}

std::string format_table(const std::vector<AnalysisReport>& reports) {
  std::ostringstream out;
  std::optional<Family> current;
  for (const auto& report : reports) {
    if (!current || *current != report.id.family) {
      if (current) out << '\n';
      current = report.id.family;
      out << item_heading(report.id.family) << '\n';
    }
    std::string count;
    switch (report.count.kind) {
      case CountKind::Exact: count = "exact " + to_string(report.count.value); break;
      case CountKind::LowerBound: count = ">= " + to_string(report.count.value); break;
      case CountKind::Zero: count = "0"; break;
      case CountKind::ExistsOnly: count = "exists"; break;
    }
    std::string label = to_string(report.id);
    label.resize(6, ' ');
    out << "  " << label << "r=" << report.r << (report.r < 10 ? "   " : report.r < 100 ? "  " : " ")
        << "exists=" << (report.exists ? "yes" : "no ") << "  obstruction="
        << (report.obstruction.pass ? "pass" : "fail") << "  dim=" << count << "  ["
        << to_string(report.count.method) << "]";
    if (report.exit_code != kExitOk) out << "  !! " << report.problems.front();
    out << '\n';
  }
  return out.str();
}

}  // namespace rootspin
