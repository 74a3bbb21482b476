#include "azkit/report.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace azkit {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const SweepReport& report) {
  out << "check_id,p,m,lhs,rhs,passed,detail\n";
  for (const auto& r : report.results) {
    out << to_string(r.check) << ',' << r.p << ',' << r.m << ','
        << r.lhs.value().get_str() << ',' << r.rhs.value().get_str() << ','
        << (r.passed ? "true" : "false") << ',' << csv_escape(r.detail)
        << '\n';
  }
}

void write_json(std::ostream& out, const SweepReport& report,
                bool include_timing) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["pmin"] = report.pmin;
  doc["pmax"] = report.pmax;
  json names = json::array();
  for (CheckId id : report.checks) names.push_back(to_string(id));
  doc["checks"] = names;

  const std::size_t passed = report.passed_count();
  json summary;
  summary["total"] = report.results.size();
  summary["passed"] = passed;
  summary["failed"] = report.results.size() - passed;
  if (include_timing)
    summary["elapsed_ms"] = report.elapsed.count();
  else
    summary["elapsed_ms"] = nullptr;
  doc["summary"] = summary;

  json rows = json::array();
  for (const auto& r : report.results) {
    json row;
    row["check_id"] = to_string(r.check);
    row["p"] = r.p;
    row["m"] = r.m;
    row["modulus"] = r.lhs.modulus().str();
    row["lhs"] = r.lhs.value().get_str();
    row["rhs"] = r.rhs.value().get_str();
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  doc["results"] = rows;

  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const SweepReport& report,
                 bool include_timing) {
  out << std::left << std::setw(6) << "check" << std::right << std::setw(8)
      << "p" << std::setw(3) << "m" << std::setw(16) << "lhs" << std::setw(16)
      << "rhs" << "  " << std::left << std::setw(8) << "passed"
      << "detail" << '\n';
  for (const auto& r : report.results) {
    out << std::left << std::setw(6) << to_string(r.check) << std::right
        << std::setw(8) << r.p << std::setw(3) << r.m << std::setw(16)
        << r.lhs.value().get_str() << std::setw(16) << r.rhs.value().get_str()
        << "  " << std::left << std::setw(8) << (r.passed ? "pass" : "FAIL")
        << r.detail << '\n';
  }
  const std::size_t passed = report.passed_count();
  out << "total " << report.results.size() << "  passed " << passed
      << "  failed " << report.results.size() - passed;
  if (include_timing) out << "  elapsed_ms " << report.elapsed.count();
  out << '\n';
}

}  // namespace azkit
