#pragma once

#include <string>
#include <vector>

#include "schatten/verify.hpp"

namespace schatten {

struct SearchConfig {
  InequalityCase case_id = InequalityCase::Cor1;
  double p = 1.0;
  int n = 3;
  int d = 4;
  Sign sign = Sign::Minus;
  int restarts = 16;
  int steps = 400;
  double initial_step = 0.5;  // times scale
  double decay = 0.95;
  double scale = 1.0;
  std::uint64_t seed = 0;
};

struct TracePoint {
  int restart = 0;
  int step = 0;  // -1 marks the restart's starting instance
  double ratio = 0.0;
};

struct SearchResult {
  SearchConfig config;
  double best_ratio = 0.0;
  CheckInstance best;
  std::vector<TracePoint> trace;  // global-best improvements, nondecreasing
  bool ill_conditioned = false;   // p < 0.5: rough objective near rank drops
};

/// (weak side)/(strong side) of the case at this p, in [0,1] up to
/// roundoff; 0 when both sides vanish. p = 2 is rejected: the ratio
/// degenerates to 1 there.
double tightness_ratio(InequalityCase c, const CheckInstance& inst,
                       const PExponent& p, Sign s);

/// Hill climbing with Gaussian entrywise perturbations, re-projection
/// onto the constraint manifold after every move, accept-if-better, step
/// decay on failure, independent restarts. Deterministic in the seed.
SearchResult optimize_ratio(const SearchConfig& cfg);

std::string search_csv_header();
std::string search_result_csv(const SearchResult& r);

enum class SweepMode { Tighten, Verify };

struct SweepRow {
  InequalityCase case_id;
  double p;
  int n, d;
  Sign sign;
  SweepMode mode;
  double value;  // best ratio, or max |rel_slack| in verify mode
  std::uint64_t seed;
};

/// One row per grid point. In Tighten mode p = 2 points fall back to a
/// verify-style equality summary.
std::vector<SweepRow> sweep(const SearchConfig& base,
                            const std::vector<double>& p_grid, SweepMode mode,
                            int verify_trials = 100);

std::string sweep_csv_header();
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace schatten
