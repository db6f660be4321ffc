#include "schatten/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <tuple>

namespace schatten {

namespace {

OperatorTuple free_tuple(const GenConfig& cfg) {
  OperatorTuple t;
  t.constraint = Constraint::Free;
  for (std::size_t k = 0; k < cfg.n; ++k) {
    Rng rng(mix_seed(cfg.seed, k));
    t.matrices.push_back(
        random_matrix(cfg.d, cfg.d, rng, cfg.dist, cfg.scale));
  }
  return t;
}

}  // namespace

CheckInstance make_case_instance(InequalityCase c, const GenConfig& cfg) {
  CheckInstance inst;
  switch (c) {
    case InequalityCase::Triangle:
      inst.a = free_tuple(cfg);
      break;
    case InequalityCase::ReverseTrianglePositive:
    case InequalityCase::LemmaA:
    case InequalityCase::LemmaB:
      inst.a = positive_tuple(cfg);
      break;
    case InequalityCase::ScalarPower:
      inst.scalars = nonnegative_scalars(cfg);
      break;
    case InequalityCase::Parallelogram: {
      GenConfig two = cfg;
      two.n = 2;
      inst.a = free_tuple(two);
      break;
    }
    case InequalityCase::LorchIdentity:
    case InequalityCase::Cor1:
    case InequalityCase::Cor2:
      inst.a = sum_zero_tuple(cfg);
      break;
    case InequalityCase::Th1:
    case InequalityCase::Th2: {
      auto [a, b] = cross_orthogonal_pair(cfg);
      inst.a = std::move(a);
      inst.b = std::move(b);
      break;
    }
    case InequalityCase::OrthTh1:
    case InequalityCase::OrthTh2:
      inst.a = orthogonal_ranges_tuple(cfg);
      break;
  }
  return inst;
}

bool case_feasible(InequalityCase c, int n, int d) {
  if (n < 1 || d < 1) return false;
  switch (c) {
    case InequalityCase::Parallelogram:
      return n == 2;
    case InequalityCase::LorchIdentity:
      return n >= 3;
    case InequalityCase::Cor1:
    case InequalityCase::Cor2:
      return n >= 2;
    case InequalityCase::Th1:
    case InequalityCase::Th2:
      return d >= 2;
    case InequalityCase::OrthTh1:
    case InequalityCase::OrthTh2:
      return d >= n;
    default:
      return true;
  }
}

int effective_thread_count() {
  if (const char* env = std::getenv("SCHATTEN_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return omp_get_max_threads();
}

namespace {

struct Job {
  InequalityCase case_id;
  std::optional<Sign> sign;
  double p;
  int n, d, trial;
  std::uint64_t seed;
};

std::uint64_t job_seed(const VerifyConfig& cfg, const Job& j) {
  std::uint64_t s = cfg.seed;
  s = mix_seed(s, static_cast<std::uint64_t>(j.case_id));
  s = mix_seed(s, j.sign ? (*j.sign == Sign::Plus ? 1 : 2) : 0);
  s = mix_seed(s, std::bit_cast<std::uint64_t>(j.p));
  s = mix_seed(s, static_cast<std::uint64_t>(j.n));
  s = mix_seed(s, static_cast<std::uint64_t>(j.d));
  s = mix_seed(s, static_cast<std::uint64_t>(j.trial));
  return s;
}

}  // namespace

std::vector<CheckReport> run_verify(const VerifyConfig& cfg, bool parallel) {
  std::vector<Job> jobs;
  for (InequalityCase c : cfg.cases) {
    std::vector<std::optional<Sign>> signs;
    if (case_has_sign(c))
      signs = {Sign::Plus, Sign::Minus};
    else
      signs = {std::nullopt};
    std::vector<std::pair<int, int>> combos;
    for (int n : cfg.n_list)
      for (int d : cfg.d_list)
        if (case_feasible(c, n, d)) combos.emplace_back(n, d);
    if (combos.empty()) continue;
    for (auto sign : signs)
      for (double p : cfg.p_grid)
        for (int trial = 0; trial < cfg.trials; ++trial) {
          auto [n, d] = combos[static_cast<std::size_t>(trial) % combos.size()];
          Job j{c, sign, p, n, d, trial, 0};
          j.seed = job_seed(cfg, j);
          jobs.push_back(j);
        }
  }

  auto key = [](const Job& j) {
    return std::make_tuple(static_cast<int>(j.case_id), j.p,
                           j.sign ? static_cast<int>(*j.sign) + 1 : 0, j.n,
                           j.d, j.trial);
  };
  std::stable_sort(jobs.begin(), jobs.end(),
                   [&](const Job& a, const Job& b) { return key(a) < key(b); });

  std::vector<std::vector<CheckReport>> slots(jobs.size());
  const int threads = parallel ? effective_thread_count() : 1;
  const long count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    const Job& j = jobs[static_cast<std::size_t>(i)];
    GenConfig gc;
    gc.seed = j.seed;
    gc.n = static_cast<std::size_t>(j.n);
    gc.d = static_cast<std::size_t>(j.d);
    CheckInstance inst = make_case_instance(j.case_id, gc);
    std::vector<CheckReport> rs =
        run_case(j.case_id, inst, PExponent(j.p), j.sign, cfg.tol);
    for (CheckReport& r : rs) r.seed = j.seed;
    slots[static_cast<std::size_t>(i)] = std::move(rs);
  }

  std::vector<CheckReport> out;
  out.reserve(jobs.size());
  for (auto& s : slots)
    for (CheckReport& r : s) out.push_back(std::move(r));
  return out;
}

int count_violations(const std::vector<CheckReport>& reports) {
  int v = 0;
  for (const auto& r : reports)
    if (r.verdict == Verdict::Violated) ++v;
  return v;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out = report_csv_header();
  out += '\n';
  for (const auto& r : reports) {
    out += report_csv_row(r);
    out += '\n';
  }
  return out;
}

}  // namespace schatten
