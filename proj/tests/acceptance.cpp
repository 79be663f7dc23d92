// Acceptance gate: one PASS/FAIL line per criterion. Exit status is
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "steenrod/suite.hpp"

using namespace steenrod;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

/// First failing entry of a report, for the detail column.
std::string first_failure(const VerificationReport& r) {
  for (const auto& e : r.entries())
    if (e.status == CheckStatus::fail) return "; first failure " + e.check + " " + e.params + " witness " + e.witness;
  return "";
}

bool all_of_check(const VerificationReport& r, const std::string& prefix, std::size_t& seen) {
  bool ok = true;
  for (const auto& e : r.entries()) {
    if (e.check.rfind(prefix, 0) != 0) continue;
    ++seen;
    ok = ok && e.status == CheckStatus::pass;
  }
  return ok;
}

Outcome odd_squares() {
  const auto start = std::chrono::steady_clock::now();
  const auto report = verify_lemma_3_1(5);
  const double t = seconds_since(start);
  const auto passed = report.count(CheckStatus::pass);
  const bool ok = report.passed() && passed == lemma_3_1_check_count(5) && t < 120;
  return {ok, std::to_string(passed) + "/" + std::to_string(lemma_3_1_check_count(5)) +
                  " membership checks for j=2..5, i=1..2^j-1 in " + secs(t) + first_failure(report)};
}

Outcome witness_monomial() {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  for (int s = 2; s <= 5; ++s) report.append(verify_lemma_4_1(s, s));
  const double t = seconds_since(start);
  return {report.passed() && report.size() == 4 && t < 30,
          "coefficient 1 at the witness for (s,j)=(2,2)..(5,5) in " + secs(t) + first_failure(report)};
}

Outcome bielliptic_sigma() {
  const auto start = std::chrono::steady_clock::now();
  const auto report = verify_prop_5_3();
  const double t = seconds_since(start);
  std::string sigma, square;
  for (const auto& e : report.entries()) {
    if (e.check == "prop-5-3/sigma") sigma = e.witness;
    if (e.check == "prop-5-3/sigma-squared") square = e.witness;
  }
  return {report.passed() && square == "alpha^3*beta*gamma*delta" && t < 1,
          "sigma = " + sigma + ", sigma^2 = " + square + " in " + secs(t) + first_failure(report)};
}

Outcome bockstein_class() {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  for (const auto& [c, l] : {std::pair{1, 3}, {1, 4}, {2, 5}, {2, 6}}) report.append(verify_theorem_4_3(c, l));
  const double t = seconds_since(start);
  return {report.passed() && report.size() == 4 && t < 30,
          "S_j(alpha) nonzero and equal to S_j Sq1(x1...xs) lambda for (c,l)=(1,3),(1,4),(2,5),(2,6) in " + secs(t) +
              first_failure(report)};
}

Outcome sigma_sq3() {
  const auto start = std::chrono::steady_clock::now();
  auto report = verify_theorem_5_4(3);
  report.append(verify_theorem_5_4(4));
  const double t = seconds_since(start);
  return {report.passed() && report.size() == 3 && t < 1,
          "l=3: " + report.entries()[0].witness + "; l=4: " + report.entries()[1].witness +
              ", Sq1(sigma) = " + report.entries()[2].witness + " in " + secs(t) + first_failure(report)};
}

Outcome action_oracle() {
  const PropertyConfig cfg;
  const auto entry = property_action_normalization(cfg);
  return {entry.status == CheckStatus::pass, entry.params + (entry.witness.empty() ? "" : " witness " + entry.witness)};
}

Outcome action_laws() {
  const PropertyConfig cfg;
  VerificationReport report;
  for (const auto& b : bundled_rings()) report.append(property_action_laws(b.ring, cfg));
  std::size_t seen = 0;
  bool ok = true;
  for (const char* law : {"property/cartan", "property/sq1-derivation", "property/sq1-sq1", "property/instability"})
    ok = all_of_check(report, law, seen) && ok;
  const std::size_t expected = 4 * bundled_rings().size();
  return {ok && seen == expected, std::to_string(seen) + " law/ring pairs x " + std::to_string(cfg.cases) +
                                      " cases, seed " + std::to_string(cfg.seed) + first_failure(report)};
}

Outcome rewriting() {
  const PropertyConfig cfg;
  VerificationReport report;
  report.add(property_adem_idempotence(cfg));
  report.add(property_rewrite_strategy(cfg));
  report.add(property_multiply_associative(cfg));
  return {report.passed(), "idempotence (degree<=60), strategy independence and associativity (degree<=40), " +
                               std::to_string(cfg.cases) + " cases each" + first_failure(report)};
}

Outcome cover_dimensions() {
  const auto report = verify_cover_dimensions();
  std::string dims;
  if (!report.empty()) dims = report.entries().back().params;
  return {report.passed() && report.size() == 4, "4 adjunctions, last: " + dims + first_failure(report)};
}

Outcome two_sided() {
  const auto report = verify_two_sided_ideal(default_ideal_degree_cap);
  return {report.passed() && report.size() == 4,
          "Sq1 in, Sq2 out, Sq3 in; degree 31 rejected with cap 30" + first_failure(report)};
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + STEENROD_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

Outcome negative_controls_and_cli() {
  const auto controls = negative_controls();
  bool ok = controls.passed();
  std::string detail = std::to_string(controls.count(CheckStatus::pass)) + "/" + std::to_string(controls.size()) +
                       " falsified variants fail";
  const std::string data = STEENROD_DATA_DIR;
  const std::pair<std::string, int> cases[] = {
      {"normalize \"Sq2 Sq2\"", 0},
      {"act --ring " + data + "/bielliptic.ring Sq1 gamma*delta", 0},
      {"verify prop-5-3", 0},
      {"verify falsified", 1},
      {"normalize Sq0", 2},
      {"act --ring " + data + "/poly4.ring Sq1 gamma", 2},
      {"verify no-such-check", 2},
      {"frobnicate", 2},
      {"ideal --which two-sided Sq31", 2},
  };
  std::size_t good = 0;
  for (const auto& [args, want] : cases) {
    const int got = run_cli(args);
    if (got == want) {
      ++good;
    } else {
      ok = false;
      detail += "; 'steenrod " + args + "' exited " + std::to_string(got) + ", expected " + std::to_string(want);
    }
  }
  detail += "; " + std::to_string(good) + "/" + std::to_string(std::size(cases)) + " CLI exit codes as expected";
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Sq^{2i-1} S_j lies in A Sq1", odd_squares},
      {"witness monomial of S_j Sq1(x1...xs)", witness_monomial},
      {"sigma^2 on the bielliptic model", bielliptic_sigma},
      {"S_j of the Bockstein class times lambda", bockstein_class},
      {"Sq3 on sigma and sigma t1", sigma_sq3},
      {"action factors through admissible form", action_oracle},
      {"action laws on every bundled ring", action_laws},
      {"rewriting soundness", rewriting},
      {"cover adjunction dimensions", cover_dimensions},
      {"two-sided ideal A Sq1 A", two_sided},
      {"negative controls and CLI exit codes", negative_controls_and_cli},
  };
  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome outcome;
    try {
      outcome = criteria[n].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.ok;
    std::cout << "criterion " << (n + 1) << ": " << (outcome.ok ? "PASS" : "FAIL") << "  " << criteria[n].first
              << "  (" << outcome.detail << ")" << std::endl;
  }
  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << criteria.size() - failures << "/"
            << criteria.size() << ")" << std::endl;
  return failures ? 1 : 0;
}
