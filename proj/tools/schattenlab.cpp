#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schatten/checks.hpp"
#include "schatten/selftest.hpp"
#include "schatten/tightness.hpp"
#include "schatten/verify.hpp"

namespace {

using namespace schatten;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(PExponent(std::stod(tok)).value());
  }
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 1) throw std::invalid_argument("list entries must be >= 1");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << payload;
}

int cmd_norm(const std::string& file, double p) {
  ComplexMatrix m = read_matrix_file(file);
  std::printf("%.17g\n", schatten_norm(m, PExponent(p)));
  return kExitOk;
}

int cmd_check(const std::string& case_name, double p,
              const std::string& sign_name, const std::string& constraint,
              const std::vector<std::string>& files,
              const std::string& format, const std::string& out) {
  InequalityCase c = case_from_string(case_name);
  std::optional<Sign> sign;
  if (case_has_sign(c)) sign = sign_from_string(sign_name);
  CheckInstance inst;
  if (c == InequalityCase::ScalarPower) {
    for (const auto& f : files) inst.scalars.push_back(std::stod(f));
  } else {
    for (const auto& f : files) inst.a.matrices.push_back(read_matrix_file(f));
    if (constraint == "free")
      inst.a.constraint = Constraint::Free;
    else if (constraint == "sum-zero")
      inst.a.constraint = Constraint::SumZero;
    else if (constraint == "orthogonal-ranges")
      inst.a.constraint = Constraint::OrthogonalRanges;
    else if (constraint == "positive-each")
      inst.a.constraint = Constraint::PositiveEach;
    else
      throw std::invalid_argument("unknown constraint: " + constraint);
    if (c == InequalityCase::Th1 || c == InequalityCase::Th2) {
      // split the files evenly into the A and B tuples
      if (inst.a.matrices.size() % 2 != 0)
        throw std::invalid_argument("Th1/Th2 need an even number of matrices");
      OperatorTuple b;
      b.constraint = Constraint::Free;
      std::size_t half = inst.a.matrices.size() / 2;
      b.matrices.assign(inst.a.matrices.begin() + half,
                        inst.a.matrices.end());
      inst.a.matrices.resize(half);
      inst.b = std::move(b);
    }
  }
  std::vector<CheckReport> rs = run_case(c, inst, PExponent(p), sign);
  write_output(out, format == "json" ? reports_json(rs) + "\n"
                                     : reports_to_csv(rs));
  return count_violations(rs) > 0 ? kExitViolation : kExitOk;
}

int cmd_verify(const std::string& case_name, const std::string& p_grid,
               const std::string& n_list, const std::string& d_list,
               int trials, std::uint64_t seed, double tol,
               const std::string& out, const std::string& format,
               bool serial) {
  VerifyConfig cfg;
  if (case_name != "all") cfg.cases = {case_from_string(case_name)};
  cfg.p_grid = parse_grid(p_grid);
  cfg.n_list = parse_int_list(n_list);
  cfg.d_list = parse_int_list(d_list);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  cfg.trials = trials;
  cfg.seed = seed;
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be > 0");
  cfg.tol = tol;
  std::vector<CheckReport> reports = run_verify(cfg, !serial);
  write_output(out, format == "json" ? reports_json(reports) + "\n"
                                     : reports_to_csv(reports));
  int violated = count_violations(reports);
  std::fprintf(stderr, "verify: %zu reports, %d violated\n", reports.size(),
               violated);
  return violated > 0 ? kExitViolation : kExitOk;
}

int cmd_tighten(const std::string& case_name, double p, int n, int d,
                const std::string& sign_name, int restarts, int steps,
                std::uint64_t seed, const std::string& out) {
  SearchConfig cfg;
  cfg.case_id = case_from_string(case_name);
  cfg.p = PExponent(p).value();
  if (cfg.p == 2.0)
    throw std::invalid_argument(
        "p = 2 is the equality regime; the ratio degenerates to 1 and there "
        "is nothing to tighten (use verify instead)");
  cfg.n = n;
  cfg.d = d;
  cfg.sign = sign_from_string(sign_name);
  cfg.restarts = restarts;
  cfg.steps = steps;
  cfg.seed = seed;
  SearchResult r = optimize_ratio(cfg);
  write_output(out, search_result_csv(r));
  return kExitOk;
}

int cmd_sweep(const std::string& case_name, const std::string& p_grid, int n,
              int d, const std::string& sign_name, const std::string& mode,
              int restarts, int steps, int trials, std::uint64_t seed,
              const std::string& out) {
  SearchConfig cfg;
  cfg.case_id = case_from_string(case_name);
  cfg.n = n;
  cfg.d = d;
  cfg.sign = sign_from_string(sign_name);
  cfg.restarts = restarts;
  cfg.steps = steps;
  cfg.seed = seed;
  SweepMode m;
  if (mode == "tighten")
    m = SweepMode::Tighten;
  else if (mode == "verify")
    m = SweepMode::Verify;
  else
    throw std::invalid_argument("mode must be tighten or verify");
  std::vector<SweepRow> rows = sweep(cfg, parse_grid(p_grid), m, trials);
  write_output(out, sweep_csv(rows));
  return kExitOk;
}

int cmd_selftest() {
  auto start = std::chrono::steady_clock::now();
  const auto& items = selftest_items();
  std::vector<std::string> failures = run_selftest();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  for (const std::string& f : failures) std::printf("FAIL %s\n", f.c_str());
  std::printf("selftest: %zu/%zu passed in %lld ms\n",
              items.size() - failures.size(), items.size(),
              static_cast<long long>(ms));
  return failures.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schatten p-norm inequality laboratory"};
  app.require_subcommand(1);

  // norm
  auto* norm = app.add_subcommand("norm", "Schatten p-norm of a matrix file");
  std::string norm_file;
  double norm_p = 2.0;
  norm->add_option("file", norm_file, "matrix in text format")->required();
  norm->add_option("--p", norm_p, "exponent p > 0");

  // check
  auto* check = app.add_subcommand("check", "run one inequality check");
  std::string check_case, check_sign = "minus", check_constraint = "free";
  std::string check_format = "csv", check_out;
  double check_p = 2.0;
  std::vector<std::string> check_files;
  check->add_option("--case", check_case, "inequality case id")->required();
  check->add_option("--p", check_p, "exponent p > 0");
  check->add_option("--sign", check_sign, "plus|minus");
  check->add_option("--constraint", check_constraint,
                    "free|sum-zero|orthogonal-ranges|positive-each");
  check->add_option("--format", check_format, "csv|json");
  check->add_option("--out", check_out, "output path (default stdout)");
  check->add_option("inputs", check_files,
                    "matrix files (or scalars for ScalarPower)")
      ->required();

  // verify
  auto* verify = app.add_subcommand("verify", "seeded verification campaign");
  std::string v_case = "all", v_grid = "0.25,0.5,1,1.5,2,3,4,10";
  std::string v_n = "2,3,5", v_d = "2,4,8", v_out, v_format = "csv";
  int v_trials = 100;
  std::uint64_t v_seed = 0;
  double v_tol = kVerdictRelTol;
  bool v_serial = false;
  verify->add_option("--case", v_case, "all or one case id");
  verify->add_option("--p-grid", v_grid, "comma-separated p values");
  verify->add_option("--n", v_n, "tuple sizes");
  verify->add_option("--dim", v_d, "matrix dimensions");
  verify->add_option("--trials", v_trials, "trials per (case, sign, p)");
  verify->add_option("--seed", v_seed, "campaign seed");
  verify->add_option("--tol", v_tol, "relative verdict tolerance");
  verify->add_option("--out", v_out, "output path (default stdout)");
  verify->add_option("--format", v_format, "csv|json");
  verify->add_flag("--serial", v_serial, "single-threaded reference run");

  // sweep
  auto* sw = app.add_subcommand("sweep", "per-p summary across a grid");
  std::string s_case, s_grid, s_sign = "minus", s_mode = "tighten", s_out;
  int s_n = 3, s_d = 4, s_restarts = 16, s_steps = 400, s_trials = 100;
  std::uint64_t s_seed = 0;
  sw->add_option("--case", s_case, "inequality case id")->required();
  sw->add_option("--p-grid", s_grid, "comma-separated p values")->required();
  sw->add_option("--n", s_n, "tuple size");
  sw->add_option("--dim", s_d, "matrix dimension");
  sw->add_option("--sign", s_sign, "plus|minus");
  sw->add_option("--mode", s_mode, "tighten|verify");
  sw->add_option("--restarts", s_restarts, "restarts per grid point");
  sw->add_option("--steps", s_steps, "steps per restart");
  sw->add_option("--trials", s_trials, "trials per grid point (verify mode)");
  sw->add_option("--seed", s_seed, "seed");
  sw->add_option("--out", s_out, "output path (default stdout)");

  // tighten
  auto* ti = app.add_subcommand("tighten", "tightness ratio search");
  std::string t_case, t_sign = "minus", t_out;
  double t_p = 1.0;
  int t_n = 3, t_d = 4, t_restarts = 16, t_steps = 400;
  std::uint64_t t_seed = 0;
  ti->add_option("--case", t_case, "inequality case id")->required();
  ti->add_option("--p", t_p, "exponent p > 0, p != 2")->required();
  ti->add_option("--n", t_n, "tuple size");
  ti->add_option("--dim", t_d, "matrix dimension");
  ti->add_option("--sign", t_sign, "plus|minus");
  ti->add_option("--restarts", t_restarts, "restart count");
  ti->add_option("--steps", t_steps, "steps per restart");
  ti->add_option("--seed", t_seed, "seed");
  ti->add_option("--out", t_out, "output path (default stdout)");

  auto* st = app.add_subcommand("selftest", "run the built-in example table");
  (void)st;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (norm->parsed()) return cmd_norm(norm_file, norm_p);
    if (check->parsed())
      return cmd_check(check_case, check_p, check_sign, check_constraint,
                       check_files, check_format, check_out);
    if (verify->parsed())
      return cmd_verify(v_case, v_grid, v_n, v_d, v_trials, v_seed, v_tol,
                        v_out, v_format, v_serial);
    if (sw->parsed())
      return cmd_sweep(s_case, s_grid, s_n, s_d, s_sign, s_mode, s_restarts,
                       s_steps, s_trials, s_seed, s_out);
    if (ti->parsed())
      return cmd_tighten(t_case, t_p, t_n, t_d, t_sign, t_restarts, t_steps,
                         t_seed, t_out);
    if (st->parsed()) return cmd_selftest();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
