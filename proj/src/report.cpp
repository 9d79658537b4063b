#include "riesz/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace riesz {

std::string kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::Inequality: return "inequality";
    case CheckKind::Identity: return "identity";
    case CheckKind::Estimate: return "estimate";
    case CheckKind::Report: return "report";
  }
  return "?";
}

CheckKind parse_kind(const std::string& name) {
  if (name == "inequality") return CheckKind::Inequality;
  if (name == "identity") return CheckKind::Identity;
  if (name == "estimate") return CheckKind::Estimate;
  if (name == "report") return CheckKind::Report;
  throw std::invalid_argument("unknown check kind '" + name + "'");
}

namespace {

bool same_double(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  return a == b;
}

}  // namespace

bool same_report(const CheckReport& a, const CheckReport& b) {
  return a.check_name == b.check_name && a.kind == b.kind && a.params.dump() == b.params.dump() &&
         same_double(a.lhs, b.lhs) && same_double(a.rhs, b.rhs) && same_double(a.ratio, b.ratio) &&
         a.passed == b.passed && same_double(a.tolerance, b.tolerance) && a.notes == b.notes &&
         a.extra.dump() == b.extra.dump();
}

double safe_ratio(double lhs, double rhs) {
  if (rhs == 0.0) return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs;
}

CheckReport make_inequality(std::string name, nlohmann::ordered_json params, double lhs, double rhs, double tolerance,
                            std::string notes) {
  CheckReport r;
  r.check_name = std::move(name);
  r.kind = CheckKind::Inequality;
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = safe_ratio(lhs, rhs);
  r.tolerance = tolerance;
  r.passed = std::isfinite(lhs) && lhs <= rhs * (1.0 + tolerance);
  r.notes = std::move(notes);
  return r;
}

CheckReport make_identity(std::string name, nlohmann::ordered_json params, double lhs, double rhs, double tolerance,
                          std::string notes) {
  CheckReport r;
  r.check_name = std::move(name);
  r.kind = CheckKind::Identity;
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = safe_ratio(lhs, rhs);
  r.tolerance = tolerance;
  r.passed = std::abs(lhs - rhs) <= tolerance * std::max(1.0, std::abs(rhs));
  r.notes = std::move(notes);
  return r;
}

CheckReport make_record(std::string name, nlohmann::ordered_json params, double lhs, double rhs, std::string notes) {
  CheckReport r;
  r.check_name = std::move(name);
  r.kind = CheckKind::Report;
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = safe_ratio(lhs, rhs);
  r.passed = true;
  r.notes = std::move(notes);
  return r;
}

CheckReport make_stability(std::string name, nlohmann::ordered_json params, const std::vector<double>& values,
                           std::string notes) {
  if (values.empty()) throw std::invalid_argument("stability aggregate needs at least one value");
  std::vector<double> v = values;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  const double median = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  CheckReport r = make_inequality(std::move(name), std::move(params), v.back(), 2.0 * median, 0.0, std::move(notes));
  r.kind = CheckKind::Estimate;
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (double x : values) vals.push_back(json_number(x));
  r.extra["values"] = std::move(vals);
  r.extra["median"] = json_number(median);
  return r;
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double number_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_double(j.get<std::string>());
  throw std::invalid_argument("expected a number, got " + j.dump());
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check_name"] = r.check_name;
  j["kind"] = kind_name(r.kind);
  j["params"] = r.params;
  j["lhs"] = json_number(r.lhs);
  j["rhs"] = json_number(r.rhs);
  j["ratio"] = json_number(r.ratio);
  j["passed"] = r.passed;
  j["tolerance"] = json_number(r.tolerance);
  j["notes"] = r.notes;
  j["extra"] = r.extra;
  return j;
}

CheckReport report_from_json(const nlohmann::ordered_json& j) {
  CheckReport r;
  r.check_name = j.at("check_name").get<std::string>();
  r.kind = parse_kind(j.at("kind").get<std::string>());
  r.params = j.at("params");
  r.lhs = number_from_json(j.at("lhs"));
  r.rhs = number_from_json(j.at("rhs"));
  r.ratio = number_from_json(j.at("ratio"));
  r.passed = j.at("passed").get<bool>();
  r.tolerance = number_from_json(j.at("tolerance"));
  r.notes = j.value("notes", std::string{});
  if (j.contains("extra")) r.extra = j["extra"];
  return r;
}

void write_jsonl(std::ostream& os, const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) os << to_json(r).dump() << '\n';
}

std::vector<CheckReport> read_jsonl(std::istream& is) {
  std::vector<CheckReport> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.push_back(report_from_json(nlohmann::ordered_json::parse(line)));
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

// One record (may span lines inside quotes). Returns false at end of input.
bool read_record(std::istream& is, std::vector<std::string>& fields) {
  fields.clear();
  std::string cur;
  bool quoted = false, any = false;
  char c;
  while (is.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (is.peek() == '"') {
          is.get(c);
          cur += '"';
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c == '\r') {
      if (is.peek() == '\n') is.get(c);
      fields.push_back(std::move(cur));
      return true;
    } else if (c == '\n') {
      fields.push_back(std::move(cur));
      return true;
    } else {
      cur += c;
    }
  }
  if (!any) return false;
  fields.push_back(std::move(cur));
  return true;
}

const char* const kCsvHeader[] = {"check_name", "params", "lhs",  "rhs",   "ratio",
                                  "passed",     "tolerance", "kind", "notes", "extra"};

}  // namespace

void write_csv(std::ostream& os, const std::vector<CheckReport>& reports) {
  bool first = true;
  for (const char* h : kCsvHeader) {
    os << (first ? "" : ",") << h;
    first = false;
  }
  os << "\r\n";
  for (const CheckReport& r : reports) {
    os << csv_field(r.check_name) << ',' << csv_field(r.params.dump()) << ',' << format_double(r.lhs) << ','
       << format_double(r.rhs) << ',' << format_double(r.ratio) << ',' << (r.passed ? "true" : "false") << ','
       << format_double(r.tolerance) << ',' << kind_name(r.kind) << ',' << csv_field(r.notes) << ','
       << csv_field(r.extra.dump()) << "\r\n";
  }
}

std::vector<CheckReport> read_csv(std::istream& is) {
  std::vector<std::string> fields;
  if (!read_record(is, fields)) return {};
  const std::size_t ncol = std::size(kCsvHeader);
  if (fields.size() != ncol) throw std::invalid_argument("unexpected CSV header");
  for (std::size_t i = 0; i < ncol; ++i)
    if (fields[i] != kCsvHeader[i]) throw std::invalid_argument("unexpected CSV column '" + fields[i] + "'");
  std::vector<CheckReport> out;
  while (read_record(is, fields)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != ncol) throw std::invalid_argument("CSV record has " + std::to_string(fields.size()) + " fields");
    CheckReport r;
    r.check_name = fields[0];
    r.params = nlohmann::ordered_json::parse(fields[1]);
    r.lhs = parse_double(fields[2]);
    r.rhs = parse_double(fields[3]);
    r.ratio = parse_double(fields[4]);
    if (fields[5] != "true" && fields[5] != "false") throw std::invalid_argument("bad passed field '" + fields[5] + "'");
    r.passed = fields[5] == "true";
    r.tolerance = parse_double(fields[6]);
    r.kind = parse_kind(fields[7]);
    r.notes = fields[8];
    r.extra = nlohmann::ordered_json::parse(fields[9]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace riesz
