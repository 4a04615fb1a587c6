#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cvxmetric {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::size_t checked = 0;
  std::size_t failed = 0;
  double seconds = 0.0;
  std::string detail;  // first failure, when any
};

SuiteResult suite_bound_soundness(std::uint64_t seed, std::size_t instances = 1000);
SuiteResult suite_attainment(std::uint64_t seed, std::size_t instances = 500);
SuiteResult suite_funk_identity(std::uint64_t seed, std::size_t instances = 500);
SuiteResult suite_ball_ground_truth(std::uint64_t seed, std::size_t pairs = 200);
SuiteResult suite_domination_chain(std::uint64_t seed, std::size_t instances = 500);
SuiteResult suite_gauge(std::uint64_t seed, std::size_t instances = 500);
SuiteResult suite_oracle_equivalence(std::uint64_t seed, std::size_t per_rep = 500);
SuiteResult suite_metric_axioms(std::uint64_t seed, std::size_t triples = 200);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

/* Prints one line per suite; true iff all pass. */
bool run_selftest(std::ostream& out, std::uint64_t seed);

}  // namespace cvxmetric
