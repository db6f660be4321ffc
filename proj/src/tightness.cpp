#include "schatten/tightness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

#include "schatten/eig.hpp"

namespace schatten {

namespace {

bool case_searchable(InequalityCase c) {
  switch (c) {
    case InequalityCase::ScalarPower:
    case InequalityCase::Parallelogram:
    case InequalityCase::LorchIdentity:
      return false;
    default:
      return true;
  }
}

}  // namespace

double tightness_ratio(InequalityCase c, const CheckInstance& inst,
                       const PExponent& p, Sign s) {
  if (p.is_two())
    throw std::domain_error("ratio degenerates to 1 at p = 2");
  if (!case_searchable(c))
    throw std::domain_error("case has no tightness ratio");
  std::vector<CheckReport> rs = run_case(c, inst, p, s);
  const CheckReport& r = rs.front();
  if (r.verdict == Verdict::Violated)
    throw std::logic_error("inequality violated during search");
  if (r.verdict == Verdict::Inapplicable)
    throw std::domain_error("case inapplicable at this p");
  if (r.lhs == 0.0 && r.rhs == 0.0) return 0.0;
  return r.lhs / r.rhs;
}

namespace {

// V f(lambda) V*
ComplexMatrix spectral_apply(const HermitianEigen& eg, double (*f)(double)) {
  const std::size_t d = eg.values.size();
  ComplexMatrix r(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    double fv = f(eg.values[k]);
    if (fv == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        r(i, j) += fv * eg.vectors(i, k) * std::conj(eg.vectors(j, k));
  }
  for (std::size_t i = 0; i < d; ++i) r(i, i) = cplx(r(i, i).real(), 0.0);
  return r;
}

// nearest PSD: hermitize, then clamp negative eigenvalues to 0
ComplexMatrix psd_project(const ComplexMatrix& x) {
  ComplexMatrix h = x;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    h(i, i) = cplx(h(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < h.cols(); ++j) {
      cplx v = 0.5 * (h(i, j) + std::conj(h(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  HermitianEigen eg = hermitian_eig(h);
  return spectral_apply(eg, [](double l) { return std::max(l, 0.0); });
}

struct RestartContext {
  // orthonormal range block per matrix, for OrthogonalRanges re-projection
  std::vector<ComplexMatrix> blocks;
};

RestartContext capture_context(InequalityCase c, const CheckInstance& inst) {
  RestartContext ctx;
  if (c == InequalityCase::OrthTh1 || c == InequalityCase::OrthTh2) {
    for (const auto& m : inst.a.matrices) {
      ColumnBasis b = orthonormal_columns(m, 1e-12 * frobenius_norm(m));
      if (b.rank == 0)
        throw std::runtime_error("degenerate zero block in search instance");
      ctx.blocks.push_back(b.q);
    }
  }
  return ctx;
}

void perturb_matrix(ComplexMatrix& m, Rng& rng, double step) {
  for (cplx& z : m.entries())
    z += step * cplx(rng.gaussian(), rng.gaussian());
}

void perturb(CheckInstance& inst, Rng& rng, double step) {
  for (auto& m : inst.a.matrices) perturb_matrix(m, rng, step);
  if (inst.b)
    for (auto& m : inst.b->matrices) perturb_matrix(m, rng, step);
  for (double& v : inst.scalars) v = std::max(v + step * rng.gaussian(), 0.0);
}

void project(InequalityCase c, CheckInstance& inst, const RestartContext& ctx) {
  switch (inst.a.constraint) {
    case Constraint::SumZero: {
      ComplexMatrix mean =
          cplx(1.0 / static_cast<double>(inst.a.size())) * inst.a.sum();
      for (auto& m : inst.a.matrices) m = m - mean;
      break;
    }
    case Constraint::PositiveEach:
      for (auto& m : inst.a.matrices) m = psd_project(m);
      break;
    case Constraint::OrthogonalRanges:
      for (std::size_t i = 0; i < inst.a.matrices.size(); ++i) {
        const ComplexMatrix& q = ctx.blocks[i];
        inst.a.matrices[i] =
            matmul(q, matmul(adjoint(q), inst.a.matrices[i]));
      }
      break;
    case Constraint::Free:
      break;
  }
  if (inst.b) {
    // restore sum(B) _|_ ran(sum A)
    ComplexMatrix sa = inst.a.sum();
    ColumnBasis basis = orthonormal_columns(sa, 1e-12 * frobenius_norm(sa));
    if (basis.rank > 0) {
      ComplexMatrix sb = inst.b->sum();
      ComplexMatrix correction =
          matmul(basis.q, matmul(adjoint(basis.q), sb));
      inst.b->matrices.back() = inst.b->matrices.back() - correction;
    }
  }
}

void validate_instance(InequalityCase c, const CheckInstance& inst) {
  if (c == InequalityCase::ScalarPower) return;
  inst.a.validate();
  if (inst.b) {
    inst.b->validate();
    validate_cross_orthogonal(inst.a, *inst.b);
  }
}

}  // namespace

SearchResult optimize_ratio(const SearchConfig& cfg) {
  if (cfg.restarts < 1 || cfg.steps < 1 || cfg.initial_step <= 0.0 ||
      cfg.decay <= 0.0 || cfg.decay >= 1.0 || cfg.n < 1 || cfg.d < 1)
    throw std::invalid_argument("invalid search configuration");
  PExponent p(cfg.p);
  if (p.is_two())
    throw std::domain_error("tightness search is meaningless at p = 2");
  if (!case_searchable(cfg.case_id))
    throw std::domain_error("case has no tightness ratio");
  if (!case_feasible(cfg.case_id, cfg.n, cfg.d))
    throw std::invalid_argument("infeasible (n, d) for this case");

  SearchResult result;
  result.config = cfg;
  result.ill_conditioned = cfg.p < 0.5;
  result.best_ratio = -1.0;

  for (int r = 0; r < cfg.restarts; ++r) {
    std::uint64_t rseed = mix_seed(cfg.seed, static_cast<std::uint64_t>(r));
    GenConfig gc;
    gc.seed = rseed;
    gc.n = static_cast<std::size_t>(cfg.n);
    gc.d = static_cast<std::size_t>(cfg.d);
    gc.scale = cfg.scale;
    CheckInstance inst = make_case_instance(cfg.case_id, gc);
    RestartContext ctx = capture_context(cfg.case_id, inst);
    double cur = tightness_ratio(cfg.case_id, inst, p, cfg.sign);
    if (cur > result.best_ratio) {
      result.best_ratio = cur;
      result.best = inst;
      result.trace.push_back({r, -1, cur});
    }
    double step = cfg.initial_step * cfg.scale;
    Rng rng(mix_seed(rseed, 0x9E3779B9ULL));
    for (int s = 0; s < cfg.steps; ++s) {
      CheckInstance cand = inst;
      perturb(cand, rng, step);
      project(cfg.case_id, cand, ctx);
      validate_instance(cfg.case_id, cand);
      double cr = tightness_ratio(cfg.case_id, cand, p, cfg.sign);
      if (cr > cur) {
        inst = std::move(cand);
        cur = cr;
        if (cur > result.best_ratio) {
          result.best_ratio = cur;
          result.best = inst;
          result.trace.push_back({r, s, cur});
        }
      } else {
        step *= cfg.decay;
      }
    }
  }

  if (result.best_ratio > 1.0 + kVerdictRelTol)
    throw std::logic_error("best ratio exceeds 1: inequality violated");
  return result;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string search_row(const SearchConfig& cfg, const TracePoint& t,
                       bool best) {
  std::string row;
  row += to_string(cfg.case_id);
  row += ',';
  row += fmt17(cfg.p);
  row += ',';
  row += std::to_string(cfg.n);
  row += ',';
  row += std::to_string(cfg.d);
  row += ',';
  row += to_string(cfg.sign);
  row += ',';
  row += std::to_string(t.restart);
  row += ',';
  row += std::to_string(t.step);
  row += ',';
  row += fmt17(t.ratio);
  row += ',';
  row += std::to_string(cfg.seed);
  row += ',';
  row += best ? '1' : '0';
  return row;
}

}  // namespace

std::string search_csv_header() {
  return "case,p,n,d,sign,restart,step,ratio,seed,best";
}

std::string search_result_csv(const SearchResult& r) {
  std::string out;
  if (r.ill_conditioned)
    out += "# ill-conditioned regime: p < 0.5, ratio is rough near rank drops\n";
  out += search_csv_header();
  out += '\n';
  for (const TracePoint& t : r.trace) {
    out += search_row(r.config, t, false);
    out += '\n';
  }
  TracePoint final = r.trace.empty() ? TracePoint{} : r.trace.back();
  out += search_row(r.config, final, true);
  out += '\n';
  return out;
}

std::vector<SweepRow> sweep(const SearchConfig& base,
                            const std::vector<double>& p_grid, SweepMode mode,
                            int verify_trials) {
  if (p_grid.empty()) throw std::invalid_argument("empty p grid");
  std::vector<SweepRow> rows;
  for (double pv : p_grid) {
    PExponent p(pv);
    SweepRow row{base.case_id, pv, base.n, base.d, base.sign, mode, 0.0,
                 base.seed};
    if (mode == SweepMode::Tighten && !p.is_two()) {
      SearchConfig cfg = base;
      cfg.p = pv;
      row.value = optimize_ratio(cfg).best_ratio;
    } else {
      // verify-style summary: worst margin across seeded trials
      row.mode = SweepMode::Verify;
      bool equality = false;
      bool have = false;
      double value = 0.0;
      for (int t = 0; t < verify_trials; ++t) {
        std::uint64_t s = mix_seed(
            mix_seed(base.seed, std::bit_cast<std::uint64_t>(pv)),
            static_cast<std::uint64_t>(t));
        GenConfig gc;
        gc.seed = s;
        gc.n = static_cast<std::size_t>(base.n);
        gc.d = static_cast<std::size_t>(base.d);
        CheckInstance inst = make_case_instance(base.case_id, gc);
        for (const CheckReport& r :
             run_case(base.case_id, inst, p, base.sign)) {
          if (r.verdict == Verdict::Inapplicable) continue;
          equality = r.orientation == Orientation::Equality;
          double margin = equality ? std::abs(r.rel_slack) : r.rel_slack;
          if (!have) {
            value = margin;
            have = true;
          } else {
            value = equality ? std::max(value, margin)
                             : std::min(value, margin);
          }
        }
      }
      row.value = value;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv_header() {
  return "case,p,n,d,sign,mode,value,seed";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = sweep_csv_header();
  out += '\n';
  for (const SweepRow& r : rows) {
    out += to_string(r.case_id);
    out += ',';
    out += fmt17(r.p);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.d);
    out += ',';
    out += to_string(r.sign);
    out += ',';
    out += r.mode == SweepMode::Tighten ? "tighten" : "verify";
    out += ',';
    out += fmt17(r.value);
    out += ',';
    out += std::to_string(r.seed);
    out += '\n';
  }
  return out;
}

}  // namespace schatten
