// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hbl/catalog.hpp"
#include "hbl/suites.hpp"

using namespace hbl;

namespace {

constexpr double kHopfSeconds = 10;
constexpr double kDualSeconds = 30;
constexpr double kEnumerationBudgetSeconds = 60;
constexpr double kMainthSeconds = 120;
constexpr std::size_t kBraceOrder = 4;
constexpr std::size_t kMaxEnumerationOrder = 6;
constexpr std::size_t kMinGradedMutations = 50;
constexpr std::size_t kMutations = 100;
constexpr std::size_t kMinDetected = 95;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string counts(const RunReport& r) {
  std::string s = std::to_string(r.passed) + "/" + std::to_string(r.instances) + " passed";
  if (!r.skipped.empty()) s += ", " + std::to_string(r.skipped.size()) + " skipped";
  if (!r.failed.empty()) s += ", first failure " + r.failed.front().instance + ": " + r.failed.front().law;
  char buf[32];
  std::snprintf(buf, sizeof buf, ", %.2fs", r.wall_time);
  return s + buf;
}

Outcome suite_outcome(const RunReport& r, double limit = 0) {
  const bool in_time = limit == 0 || r.wall_time < limit;
  return {r.ok() && r.consistent() && r.instances > 0 && in_time, counts(r)};
}

Outcome criterion_braces() {
  RunReport r("braces");
  std::size_t reached = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= kMaxEnumerationOrder; ++n) {
    if (n > kBraceOrder && seconds_since(t0) > kEnumerationBudgetSeconds) break;
    std::vector<NamedBrace> braces;
    for (const auto& [name, b] : linearized_braces(n)) {
      if (b.space().dim() == n) braces.push_back({name, b});
    }
    r.merge(suite_braces(braces));
    reached = n;
  }
  bool agree = true;
  for (std::size_t n = 1; n <= kBraceOrder; ++n) {
    agree = agree && enumerate_skew_braces(n).size() == enumerate_skew_braces_naive(n).size();
  }
  return {r.ok() && r.consistent() && agree && reached >= kBraceOrder,
          counts(r) + ", orders 1.." + std::to_string(reached) +
              (agree ? ", enumerators agree" : ", enumerators DISAGREE")};
}

Outcome criterion_equiv2(const std::vector<NamedBrace>& braces) {
  const RunReport r = suite_equiv2(braces);
  std::size_t graded = 0;
  for (const auto& note : r.notes) {
    if (note.rfind("graded h2 mutations: ", 0) == 0) graded = std::stoul(note.substr(21));
  }
  const Outcome base = suite_outcome(r);
  return {base.pass && graded >= kMinGradedMutations,
          base.detail + ", graded mutations " + std::to_string(graded)};
}

Outcome criterion_mutations(const std::vector<NamedHopf>& hopfs, const std::vector<NamedBrace>& braces) {
  const RunReport r = suite_mutations(hopfs, braces, kMutations);
  std::size_t detected = 0;
  for (const auto& note : r.notes) {
    if (note.rfind("detected ", 0) == 0) detected = std::stoul(note.substr(9));
  }
  return {r.ok() && r.instances == kMutations && detected >= kMinDetected,
          std::to_string(detected) + "/" + std::to_string(kMutations) + " detected, rest re-verified valid"};
}

}  // namespace

int main() {
  const auto hopfs = hopf_catalog(8);
  const auto braces = brace_catalog(kBraceOrder);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"hopf law suite", [] { return suite_outcome(suite_hopf_groups(), kHopfSeconds); }},
      {"dual suite", [&] { return suite_outcome(suite_duals(hopfs), kDualSeconds); }},
      {"brace suite", criterion_braces},
      {"mainth", [&] { return suite_outcome(suite_mainth(braces), kMainthSeconds); }},
      {"firstM", [&] { return suite_outcome(suite_firstM(braces)); }},
      {"equiv2HBr", [&] { return criterion_equiv2(braces); }},
      {"smash", [&] { return suite_outcome(suite_smashcat(braces)); }},
      {"ccclass_adjoint", [&] { return suite_outcome(suite_adjointcc(hopfs)); }},
      {"semidirect", [] { return suite_outcome(suite_semidirect(kBraceOrder)); }},
      {"mutation sensitivity", [&] { return criterion_mutations(hopfs, braces); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %zu: %s %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
