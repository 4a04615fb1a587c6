// Acceptance gate: every release-blocking behavior, one line of verdict each.
// Usage: acceptance <path-to-cli>. Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "cvxmetric/selftest.hpp"

namespace {

using cvxmetric::SuiteResult;

constexpr std::uint64_t kSeed = 20260822;

int g_failures = 0;

void verdict(int criterion, bool pass, const std::string& what, const std::string& extra) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!extra.empty()) std::cout << " (" << extra << ")";
  std::cout << '\n';
  if (!pass) ++g_failures;
}

std::string stats(const SuiteResult& r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu checks, %zu failed, %.2f s", r.checked, r.failed,
                r.seconds);
  std::string s = buf;
  if (!r.pass && !r.detail.empty()) s += "; first: " + r.detail;
  return s;
}

void suite_criterion(int criterion, const std::string& what, const SuiteResult& r,
                     std::size_t min_checked, double max_seconds = 0.0) {
  bool pass = r.pass && r.checked >= min_checked;
  std::string extra = stats(r);
  if (max_seconds > 0.0 && r.seconds > max_seconds) {
    pass = false;
    extra += "; over the " + std::to_string(static_cast<int>(max_seconds)) + " s budget";
  }
  verdict(criterion, pass, what, extra);
}

int run_exit_code(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  while (fread(buf, 1, sizeof buf, pipe) > 0) {
  }
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 1;
  }
  const std::string cli = argv[1];

  suite_criterion(1, "random certified instances all pass at tolerance 1e-9",
                  cvxmetric::suite_bound_soundness(kSeed, 1000), 1000, 30.0);
  suite_criterion(2, "extremal functions attain both variation bounds",
                  cvxmetric::suite_attainment(kSeed, 500), 500);
  suite_criterion(3, "exit-factor identity and ratio form agree",
                  cvxmetric::suite_funk_identity(kSeed, 500), 500);
  suite_criterion(4, "ball distances match the chord cross-ratio",
                  cvxmetric::suite_ball_ground_truth(kSeed, 200), 200);
  suite_criterion(5, "bound families dominate in the expected order",
                  cvxmetric::suite_domination_chain(kSeed, 500), 500);
  suite_criterion(6, "gauge inverts the exit factor and subgradients are members",
                  cvxmetric::suite_gauge(kSeed, 500), 500);
  suite_criterion(7, "closed-form exit factors match membership-only bisection",
                  cvxmetric::suite_oracle_equivalence(kSeed, 500), 1500);
  suite_criterion(8, "weak-metric axioms and the symmetrization sandwich hold",
                  cvxmetric::suite_metric_axioms(kSeed, 200), 600);

  const std::string body_path = "/tmp/cvxmetric_acceptance_interval.json";
  {
    std::ofstream out(body_path);
    out << R"({"type": "hpolytope", "A": [[1.0], [-1.0]], "b": [1.0, 0.0]})";
  }
  const int falsifier = run_exit_code(cli + " certify --body " + body_path +
                                      " --fn sin --m 0 --M 1 --pairs 500 --seed " +
                                      std::to_string(kSeed));
  verdict(9, falsifier == 2, "a non-convex function is falsified with exit code 2",
          "exit code " + std::to_string(falsifier));
  std::remove(body_path.c_str());

  const auto t0 = std::chrono::steady_clock::now();
  const int selftest = run_exit_code(cli + " selftest --seed " + std::to_string(kSeed));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "exit code %d, %.2f s", selftest, seconds);
  verdict(10, selftest == 0 && seconds <= 60.0, "the full selftest passes within 60 s", buf);

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
