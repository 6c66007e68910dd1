// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "properties.hpp"
#include "rootspin/certs.hpp"
#include "rootspin/report.hpp"
#include "rootspin/sigsum.hpp"
#include "rootspin/spinor.hpp"
#include "run_command.hpp"

namespace {

using namespace rootspin;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

long peak_rss_kib() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool asserted_existence(const FamilyRank& id) {
  const int n = id.rank;
  switch (id.family) {
    case Family::A: return n % 2 == 0;
    case Family::B: return false;
    case Family::C: return n % 4 == 0 || n % 4 == 3;
    case Family::D: return n % 4 == 0 || n % 4 == 1;
    case Family::E: return n != 7;
    case Family::F:
    case Family::G: return true;
  }
  return false;
}

void exact_constants(Criterion& c) {
  const RootSystem g2 = positive_roots({Family::G, 2});
  auto t = Clock::now();
  const u128 g2_count = count_bruteforce(g2).value;
  const double g2_ms = ms_since(t);
  c.check(g2_count == 4, "count(G2) = 4");
  c.check(g2_ms < 1.0, "G2 under 1 ms");

  const RootSystem f4 = positive_roots({Family::F, 4});
  t = Clock::now();
  const u128 f4_brute = count_bruteforce(f4).value;
  const double f4_brute_ms = ms_since(t);
  t = Clock::now();
  const u128 f4_mitm = count_mitm(f4).value;
  const double f4_mitm_ms = ms_since(t);
  c.check(f4_brute == 34432 && f4_mitm == 34432, "count(F4) = 34432");
  c.check(f4_brute_ms < 5000, "F4 brute force under 5 s");
  c.check(f4_mitm_ms < 500, "F4 meet-in-the-middle under 0.5 s");

  t = Clock::now();
  const CountResult e6 = count_mitm(positive_roots({Family::E, 6}));
  const double e6_ms = ms_since(t);
  const long rss = peak_rss_kib();
  c.check(e6.value == 13697920, "count(E6) = 13697920");
  c.check(e6_ms < 30000, "E6 under 30 s");
  c.check(rss < 1024 * 1024, "E6 under 1 GiB");

  c.detail << " G2=" << to_string(g2_count) << " (" << g2_ms << " ms), F4=" << to_string(f4_brute)
           << " brute " << f4_brute_ms << " ms / mitm " << f4_mitm_ms << " ms, E6=" << to_string(e6.value)
           << " (" << e6_ms << " ms, table " << e6.memory_peak / (1 << 20) << " MiB, peak rss "
           << rss / 1024 << " MiB)";
}

void existence_table(Criterion& c) {
  std::size_t positives = 0, negatives = 0;
  for (const auto& id : table_ids()) {
    const RootSystem s = positive_roots(id);
    const AnalysisReport report = analyze(id);
    const std::string name = to_string(id);
    c.check(report.exit_code == kExitOk, name + " exit code");
    c.check(report.exists == asserted_existence(id), name + " existence");
    if (asserted_existence(id)) {
      ++positives;
      const auto cert = certificate(id);
      c.check(cert && verify(s, *cert).ok, name + " certificate verifies");
      c.check(report.obstruction.pass, name + " obstruction passes");
    } else {
      ++negatives;
      c.check(!report.obstruction.pass, name + " obstruction fails");
    }
  }
  c.detail << " " << positives << " certified positive, " << negatives << " obstructed negative";
}

void lower_bounds(Criterion& c) {
  std::size_t checked = 0;
  for (const auto& id : table_ids()) {
    if (!asserted_existence(id) || root_count(id) > 49) continue;
    AnalyzeOptions options;
    options.max_r = 49;
    const AnalysisReport report = analyze(id, options);
    const bool exact = report.count.kind == CountKind::Exact;
    c.check(exact && report.count.value >= lower_bound(id), to_string(id) + " count >= lower bound");
    if (id == FamilyRank{Family::A, 4} || id == FamilyRank{Family::C, 4} || id == FamilyRank{Family::C, 7} ||
        id == FamilyRank{Family::D, 4} || id == FamilyRank{Family::D, 5})
      c.detail << " " << to_string(id) << "=" << to_string(report.count.value) << ">="
               << to_string(lower_bound(id));
    ++checked;
  }
  c.check(lower_bound({Family::A, 4}) >= 4 && lower_bound({Family::C, 4}) >= 2 &&
              lower_bound({Family::C, 7}) >= 4 && lower_bound({Family::D, 4}) >= 2 &&
              lower_bound({Family::D, 5}) >= 2,
          "closed-form bounds");
  c.detail << " (" << checked << " systems)";
}

void oracle_equivalence(Criterion& c) {
  const std::vector<FamilyRank> ids{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
                                    {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2}};
  const auto start = Clock::now();
  for (const auto& id : ids) {
    const RootSystem s = positive_roots(id);
    const std::uint64_t oracle = invariant_dimension(s);
    const u128 count = count_bruteforce(s).value;
    c.check(u128{oracle} == count, to_string(id));
    c.detail << " " << to_string(id) << "=" << oracle;
  }
  const double ms = ms_since(start);
  c.check(ms < 10000, "under 10 s");
  c.detail << " (" << ms << " ms)";
}

void backend_equivalence(Criterion& c) {
  const auto p = testing::check_backend_equivalence(5);
  c.check(p.ok(), p.first_failure);
  c.detail << " " << p.trials << " systems (" << testing::backend_matrix().size() << " root systems + random)";
}

void property_suite(Criterion& c) {
  for (const auto& p : testing::run_all_properties()) {
    c.check(p.ok(), p.name + ": " + p.first_failure);
    c.detail << " " << p.name << " " << p.trials - p.failures << "/" << p.trials << ";";
  }
}

void e8_partial(Criterion& c) {
  const RootSystem e8 = positive_roots({Family::E, 8});
  const auto cert = certificate({Family::E, 8});
  c.check(cert && verify(e8, *cert).ok, "E8 certificate verifies");
  c.check(cert && testing::is_zero(signed_sum(e8, cert->assemble())), "assembled E8 witness sums to zero");

  std::vector<std::size_t> idx(21);
  std::iota(idx.begin(), idx.end(), std::size_t{7});
  const RootSystem sub = e8.subsystem(idx);
  bool shape = true;
  for (const auto& root : sub.roots) {
    int ones = 0, minus = 0;
    for (auto x : root) ones += x == 1, minus += x == -1;
    shape = shape && root[0] == 0 && ones == 1 && minus == 1;
  }
  c.check(shape, "sub-family is {l_i - l_j : 2 <= i < j <= 8}");
  const auto start = Clock::now();
  const u128 n1 = count_bruteforce(sub).value;
  const double ms = ms_since(start);
  c.check(ms < 10000, "N1 under 10 s");
  c.check(n1 == 2640, "N1 = 2640 (369600 = 2 x 70 x N1)");
  c.detail << " N1=" << to_string(n1) << " (" << ms << " ms), 2*70*N1=" << to_string(2 * 70 * n1);
}

std::string analyze_json(const std::string& args) {
  const auto result = testing::run_command(std::string(ROOTSPIN_CLI) + " analyze " + args + " --json");
  if (result.exit_code != 0) return "exit " + std::to_string(result.exit_code);
  nlohmann::json j = nlohmann::json::parse(result.out, nullptr, false);
  if (j.is_discarded() || !j.contains("timings")) return "unparsable";
  // The emitted text must already be the canonical key-sorted dump.
  if (j.dump(2) + "\n" != result.out) return "not canonical";
  j.erase("timings");
  return j.dump(2);
}

void determinism(Criterion& c) {
  for (const char* target : {"G 2", "B 3", "D 5", "F 4", "E 6", "E 8"}) {
    const std::string base = analyze_json(std::string(target) + " --threads 1");
    c.check(base.front() == '{', std::string(target) + " " + base);
    c.check(base == analyze_json(std::string(target) + " --threads 1"), std::string(target) + " rerun");
    c.check(base == analyze_json(std::string(target) + " --threads 4"), std::string(target) + " threads 4");
  }
  c.detail << " 6 systems, threads 1/1/4";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"exact constants", exact_constants},
      {"existence table", existence_table},
      {"lower bounds", lower_bounds},
      {"oracle equivalence", oracle_equivalence},
      {"backend equivalence", backend_equivalence},
      {"property suite", property_suite},
      {"E8 partial reproduction", e8_partial},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    failures += !c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ":" << c.detail.str()
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
