#include "schatten/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace schatten {

const char* to_string(InequalityCase c) {
  switch (c) {
    case InequalityCase::Triangle: return "Triangle";
    case InequalityCase::ReverseTrianglePositive: return "ReverseTrianglePositive";
    case InequalityCase::LemmaA: return "LemmaA";
    case InequalityCase::LemmaB: return "LemmaB";
    case InequalityCase::ScalarPower: return "ScalarPower";
    case InequalityCase::Parallelogram: return "Parallelogram";
    case InequalityCase::LorchIdentity: return "LorchIdentity";
    case InequalityCase::Th1: return "Th1";
    case InequalityCase::Cor1: return "Cor1";
    case InequalityCase::OrthTh1: return "OrthTh1";
    case InequalityCase::Th2: return "Th2";
    case InequalityCase::Cor2: return "Cor2";
    case InequalityCase::OrthTh2: return "OrthTh2";
  }
  return "?";
}

const char* to_string(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

const char* to_string(Orientation o) {
  return o == Orientation::LhsLeqRhs ? "LhsLeqRhs" : "Equality";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::EqualityHolds: return "EqualityHolds";
    case Verdict::Violated: return "Violated";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "?";
}

InequalityCase case_from_string(const std::string& s) {
  for (InequalityCase c : kAllCases)
    if (s == to_string(c)) return c;
  throw std::invalid_argument("unknown case: " + s);
}

Sign sign_from_string(const std::string& s) {
  if (s == "plus" || s == "Plus" || s == "+") return Sign::Plus;
  if (s == "minus" || s == "Minus" || s == "-") return Sign::Minus;
  throw std::invalid_argument("unknown sign: " + s);
}

bool case_has_sign(InequalityCase c) {
  switch (c) {
    case InequalityCase::Th1:
    case InequalityCase::Cor1:
    case InequalityCase::OrthTh1:
    case InequalityCase::Th2:
    case InequalityCase::Cor2:
    case InequalityCase::OrthTh2:
      return true;
    default:
      return false;
  }
}

CheckReport make_report(InequalityCase c, double p, int n, int d,
                        std::optional<Sign> sign, double lhs, double rhs,
                        Orientation orientation, double tolerance) {
  CheckReport r;
  r.case_id = c;
  r.p = p;
  r.n = n;
  r.d = d;
  r.sign = sign;
  r.lhs = lhs;
  r.rhs = rhs;
  r.orientation = orientation;
  r.tolerance = tolerance;
  double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  r.slack = rhs - lhs;
  r.rel_slack = r.slack / scale;
  double budget = std::max(tolerance * scale, kVerdictAbsFloor);
  if (orientation == Orientation::Equality)
    r.verdict = std::abs(r.slack) <= budget ? Verdict::EqualityHolds
                                            : Verdict::Violated;
  else
    r.verdict = r.slack >= -budget ? Verdict::Holds : Verdict::Violated;
  return r;
}

CheckReport make_inapplicable(InequalityCase c, double p, int n, int d,
                              std::optional<Sign> sign, double tolerance) {
  CheckReport r;
  r.case_id = c;
  r.p = p;
  r.n = n;
  r.d = d;
  r.sign = sign;
  r.tolerance = tolerance;
  r.verdict = Verdict::Inapplicable;
  return r;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string report_csv_header() {
  return "case,p,n,d,sign,lhs,rhs,orientation,slack,rel_slack,tolerance,verdict,seed";
}

std::string report_csv_row(const CheckReport& r) {
  std::string row;
  row += to_string(r.case_id);
  row += ',';
  row += fmt17(r.p);
  row += ',';
  row += std::to_string(r.n);
  row += ',';
  row += std::to_string(r.d);
  row += ',';
  if (r.sign) row += to_string(*r.sign);
  row += ',';
  row += fmt17(r.lhs);
  row += ',';
  row += fmt17(r.rhs);
  row += ',';
  row += to_string(r.orientation);
  row += ',';
  row += fmt17(r.slack);
  row += ',';
  row += fmt17(r.rel_slack);
  row += ',';
  row += fmt17(r.tolerance);
  row += ',';
  row += to_string(r.verdict);
  row += ',';
  row += std::to_string(r.seed);
  return row;
}

namespace {

nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json j;
  j["case"] = to_string(r.case_id);
  j["p"] = r.p;
  j["n"] = r.n;
  j["d"] = r.d;
  j["sign"] = r.sign ? to_string(*r.sign) : "";
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["orientation"] = to_string(r.orientation);
  j["slack"] = r.slack;
  j["rel_slack"] = r.rel_slack;
  j["tolerance"] = r.tolerance;
  j["verdict"] = to_string(r.verdict);
  j["seed"] = r.seed;
  return j;
}

}  // namespace

std::string report_json(const CheckReport& r) {
  return report_to_json(r).dump(2);
}

std::string reports_json(const std::vector<CheckReport>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr.dump(2);
}

}  // namespace schatten
