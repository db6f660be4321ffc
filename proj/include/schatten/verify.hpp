#pragma once

#include <vector>

#include "schatten/checks.hpp"
#include "schatten/gen.hpp"

namespace schatten {

/// Builds a random admissible instance for a case. n and d are adjusted
/// to the nearest feasible values by the campaign planner beforehand; this
/// function requires them to be feasible already.
CheckInstance make_case_instance(InequalityCase c, const GenConfig& cfg);

/// True when (n, d) can host an admissible instance of the case.
bool case_feasible(InequalityCase c, int n, int d);

struct VerifyConfig {
  std::vector<InequalityCase> cases{kAllCases, kAllCases + 13};
  std::vector<double> p_grid{0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 10.0};
  std::vector<int> n_list{2, 3, 5};
  std::vector<int> d_list{2, 4, 8};
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = kVerdictRelTol;
};

/// Runs the campaign: for every case, sign variant, and grid p, `trials`
/// instances cycling through the feasible (n, d) combinations. Rows come
/// back sorted by (case, p, sign, n, d, trial) regardless of the number
/// of worker threads, so serial and parallel runs are byte-identical.
std::vector<CheckReport> run_verify(const VerifyConfig& cfg, bool parallel);

int count_violations(const std::vector<CheckReport>& reports);

/// Honors SCHATTEN_LAB_THREADS; returns the worker count used.
int effective_thread_count();

std::string reports_to_csv(const std::vector<CheckReport>& reports);

}  // namespace schatten
