#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include <azkit/report.hpp>

using namespace azkit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden_path(const std::string& name) {
  return std::string(AZKIT_GOLDEN_DIR) + "/" + name;
}

SweepReport all_checks_5_20() {
  return sweep(5, 20, {kAllChecks.begin(), kAllChecks.end()}, 2);
}

}  // namespace

TEST_CASE("csv_escape") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("") == "");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("CSV output matches the golden file") {
  std::ostringstream out;
  write_csv(out, all_checks_5_20());
  CHECK(out.str() == slurp(golden_path("sweep_5_20_all.csv")));
}

TEST_CASE("JSON output matches the golden file") {
  std::ostringstream out;
  write_json(out, all_checks_5_20());
  CHECK(out.str() == slurp(golden_path("sweep_5_20_all.json")));
}

TEST_CASE("CSV and JSON carry identical result tuples") {
  SweepReport rep = all_checks_5_20();

  std::ostringstream joss;
  write_json(joss, rep);
  auto doc = nlohmann::json::parse(joss.str());

  std::ostringstream csv;
  write_csv(csv, rep);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "check_id,p,m,lhs,rhs,passed,detail");

  std::size_t i = 0;
  while (std::getline(lines, line)) {
    // no quoting occurs in sweep rows: details never contain commas
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() == 6) f.push_back("");  // empty trailing detail
    REQUIRE(f.size() == 7);
    const auto& row = doc["results"][i];
    CHECK(f[0] == row["check_id"].get<std::string>());
    CHECK(f[1] == std::to_string(row["p"].get<std::uint64_t>()));
    CHECK(f[2] == std::to_string(row["m"].get<unsigned>()));
    CHECK(f[3] == row["lhs"].get<std::string>());
    CHECK(f[4] == row["rhs"].get<std::string>());
    CHECK(f[5] == (row["passed"].get<bool>() ? "true" : "false"));
    CHECK(f[6] == row["detail"].get<std::string>());
    ++i;
  }
  CHECK(i == rep.results.size());
  CHECK(doc["summary"]["total"].get<std::size_t>() == rep.results.size());
}

TEST_CASE("serialized bytes are identical across worker counts") {
  std::vector<CheckId> all(kAllChecks.begin(), kAllChecks.end());
  SweepReport one = sweep(5, 50, all, 1);
  SweepReport eight = sweep(5, 50, all, 8);
  for (auto writer : {+[](std::ostream& o, const SweepReport& r) { write_csv(o, r); },
                      +[](std::ostream& o, const SweepReport& r) { write_json(o, r, false); },
                      +[](std::ostream& o, const SweepReport& r) { write_table(o, r, false); }}) {
    std::ostringstream a, b;
    writer(a, one);
    writer(b, eight);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("timing is opt-in so default output is reproducible") {
  SweepReport rep = sweep(5, 10, {CheckId::B3}, 1);

  std::ostringstream without;
  write_json(without, rep, false);
  CHECK(nlohmann::json::parse(without.str())["summary"]["elapsed_ms"].is_null());

  std::ostringstream with;
  write_json(with, rep, true);
  CHECK(nlohmann::json::parse(with.str())["summary"]["elapsed_ms"].is_number());

  std::ostringstream table_with;
  write_table(table_with, rep, true);
  CHECK(table_with.str().find("elapsed_ms") != std::string::npos);
  std::ostringstream table_without;
  write_table(table_without, rep, false);
  CHECK(table_without.str().find("elapsed_ms") == std::string::npos);
}

TEST_CASE("failed results surface in the summary") {
  // fabricate a failing row to exercise the failure accounting
  SweepReport rep = sweep(5, 10, {CheckId::B3}, 1);
  CheckResult bad = rep.results[0];
  bad.passed = false;
  bad.detail = "synthetic";
  rep.results.push_back(bad);
  CHECK(rep.failures().size() == 1);
  CHECK(rep.passed_count() == rep.results.size() - 1);

  std::ostringstream json_out;
  write_json(json_out, rep);
  auto doc = nlohmann::json::parse(json_out.str());
  CHECK(doc["summary"]["failed"].get<int>() == 1);

  std::ostringstream csv_out;
  write_csv(csv_out, rep);
  CHECK(csv_out.str().find(",false,synthetic") != std::string::npos);

  std::ostringstream table_out;
  write_table(table_out, rep, false);
  CHECK(table_out.str().find("FAIL") != std::string::npos);
}
