#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schatten {

enum class InequalityCase {
  Triangle,
  ReverseTrianglePositive,
  LemmaA,
  LemmaB,
  ScalarPower,
  Parallelogram,
  LorchIdentity,
  Th1,
  Cor1,
  OrthTh1,
  Th2,
  Cor2,
  OrthTh2,
};

inline constexpr InequalityCase kAllCases[] = {
    InequalityCase::Triangle,      InequalityCase::ReverseTrianglePositive,
    InequalityCase::LemmaA,        InequalityCase::LemmaB,
    InequalityCase::ScalarPower,   InequalityCase::Parallelogram,
    InequalityCase::LorchIdentity, InequalityCase::Th1,
    InequalityCase::Cor1,          InequalityCase::OrthTh1,
    InequalityCase::Th2,           InequalityCase::Cor2,
    InequalityCase::OrthTh2,
};

enum class Sign { Plus, Minus };
enum class Orientation { LhsLeqRhs, Equality };
enum class Verdict { Holds, EqualityHolds, Violated, Inapplicable };

const char* to_string(InequalityCase c);
const char* to_string(Sign s);
const char* to_string(Orientation o);
const char* to_string(Verdict v);
InequalityCase case_from_string(const std::string& s);
Sign sign_from_string(const std::string& s);

/// The +- statement cases, checked under both signs independently.
bool case_has_sign(InequalityCase c);

inline constexpr double kVerdictRelTol = 1e-8;
inline constexpr double kVerdictAbsFloor = 1e-12;

struct CheckReport {
  InequalityCase case_id;
  double p = 0.0;
  int n = 0;
  int d = 0;
  std::optional<Sign> sign;
  double lhs = 0.0;
  double rhs = 0.0;
  Orientation orientation = Orientation::LhsLeqRhs;
  double slack = 0.0;      // rhs - lhs
  double rel_slack = 0.0;  // slack / max(|lhs|, |rhs|, 1)
  double tolerance = kVerdictRelTol;
  Verdict verdict = Verdict::Holds;
  std::uint64_t seed = 0;
};

/// Fills slack/rel_slack/verdict from the oriented sides.
CheckReport make_report(InequalityCase c, double p, int n, int d,
                        std::optional<Sign> sign, double lhs, double rhs,
                        Orientation orientation, double tolerance);

CheckReport make_inapplicable(InequalityCase c, double p, int n, int d,
                              std::optional<Sign> sign, double tolerance);

std::string report_csv_header();
std::string report_csv_row(const CheckReport& r);
std::string report_json(const CheckReport& r);
std::string reports_json(const std::vector<CheckReport>& rs);

}  // namespace schatten
