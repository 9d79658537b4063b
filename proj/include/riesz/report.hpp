#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace riesz {

enum class CheckKind {
  /// passed iff lhs <= rhs (1 + tolerance)
  Inequality,
  /// passed iff |lhs - rhs| <= tolerance max(1, |rhs|)
  Identity,
  /// stability of an empirical constant: lhs = max, rhs = 2 median
  Estimate,
  /// informational; never affects the exit status
  Report,
};

std::string kind_name(CheckKind kind);
CheckKind parse_kind(const std::string& name);

struct CheckReport {
  std::string check_name;
  CheckKind kind = CheckKind::Inequality;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool passed = false;
  double tolerance = 0.0;
  std::string notes;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  /// Whether a failure of this report should fail a suite.
  bool asserted() const { return kind != CheckKind::Report; }
};

/// NaN-aware field-by-field equality (params/extra compared as JSON text).
bool same_report(const CheckReport& a, const CheckReport& b);

/// lhs / rhs, with 0/0 = 0 and x/0 = inf.
double safe_ratio(double lhs, double rhs);

CheckReport make_inequality(std::string name, nlohmann::ordered_json params, double lhs, double rhs, double tolerance,
                            std::string notes = {});
CheckReport make_identity(std::string name, nlohmann::ordered_json params, double lhs, double rhs, double tolerance,
                          std::string notes = {});
/// Informational record; passed is always true.
CheckReport make_record(std::string name, nlohmann::ordered_json params, double lhs, double rhs, std::string notes = {});
/// max(values) <= 2 median(values).
CheckReport make_stability(std::string name, nlohmann::ordered_json params, const std::vector<double>& values,
                           std::string notes = {});

/// JSON number, or "inf" / "-inf" / "nan" for non-finite values.
nlohmann::ordered_json json_number(double v);
double number_from_json(const nlohmann::ordered_json& j);

/// Shortest round-trip decimal form ("inf", "-inf", "nan" for non-finite).
std::string format_double(double v);
double parse_double(const std::string& s);

nlohmann::ordered_json to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::ordered_json& j);

/// One compact JSON object per line, field order check_name, kind, params,
/// lhs, rhs, ratio, passed, tolerance, notes, extra.
void write_jsonl(std::ostream& os, const std::vector<CheckReport>& reports);
std::vector<CheckReport> read_jsonl(std::istream& is);

/// RFC 4180 CSV with header
/// check_name,params,lhs,rhs,ratio,passed,tolerance,kind,notes,extra
/// (params and extra as compact JSON).
void write_csv(std::ostream& os, const std::vector<CheckReport>& reports);
std::vector<CheckReport> read_csv(std::istream& is);

}  // namespace riesz
