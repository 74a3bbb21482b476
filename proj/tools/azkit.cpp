// azkit: compute the Almkvist-Zudilin numbers and their companion sequences,
// and batch-verify the supercongruences they satisfy over prime ranges.
//
// Exit codes: 0 all requested checks passed; 1 at least one check failed;
// 2 usage error; 3 precondition error (NotPrime, PrimeTooSmall, IllPosed).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "azkit/checks.hpp"
#include "azkit/padic.hpp"
#include "azkit/primes.hpp"
#include "azkit/report.hpp"
#include "azkit/sequences.hpp"

namespace {

using azkit::CheckId;
using azkit::EvalPath;
using u64 = std::uint64_t;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("unknown format '" + s + "' (expected table, csv or json)");
}

// "all", "modp", "modp3", or a comma-separated list of check ids.
std::vector<CheckId> parse_check_set(const std::string& s) {
  if (s == "all")
    return {azkit::kAllChecks.begin(), azkit::kAllChecks.end()};
  if (s == "modp")
    return {azkit::kModPChecks.begin(), azkit::kModPChecks.end()};
  if (s == "modp3")
    return {azkit::kModP3Checks.begin(), azkit::kModP3Checks.end()};
  std::vector<CheckId> ids;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto id = azkit::parse_check_id(item);
    if (!id) throw UsageError("unknown check id '" + item + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw UsageError("empty check list");
  return ids;
}

// Data goes to --output (or stdout); diagnostics go to stderr.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

int emit_report(const azkit::SweepReport& report, Format format,
                std::ostream& out, bool timing) {
  switch (format) {
    case Format::Csv: azkit::write_csv(out, report); break;
    case Format::Json: azkit::write_json(out, report, timing); break;
    case Format::Table: azkit::write_table(out, report, timing); break;
  }
  return report.failures().empty() ? 0 : 1;
}

int run_sweep(u64 pmin, std::optional<u64> pmax, const std::string& checks,
              unsigned workers, bool exact, Format format,
              const std::string& output, bool timing) {
  const std::vector<CheckId> ids = parse_check_set(checks);
  const u64 hi = pmax ? *pmax : (checks == "modp" ? 2000 : 500);
  auto report = azkit::sweep(pmin, hi, ids, workers,
                             exact ? EvalPath::Both : EvalPath::Fast);
  OutputStream out(output);
  return emit_report(report, format, out.get(), timing);
}

int run_single_check(const std::string& id_str, u64 p, bool exact,
                     Format format, const std::string& output, bool timing) {
  auto id = azkit::parse_check_id(id_str);
  if (!id) throw UsageError("unknown check id '" + id_str + "'");
  azkit::SweepReport report;
  report.pmin = report.pmax = p;
  report.checks = {*id};
  report.results.push_back(
      azkit::run_check(*id, p, exact ? EvalPath::Both : EvalPath::Fast));
  OutputStream out(output);
  return emit_report(report, format, out.get(), timing);
}

int run_identity_range(const std::string& id_str, std::optional<u64> nmin,
                       u64 nmax, Format format, const std::string& output) {
  auto id = azkit::parse_identity_id(id_str);
  if (!id) throw UsageError("unknown identity id '" + id_str + "'");
  const u64 lo = nmin ? *nmin : (*id == azkit::IdentityId::IC1 ? 1 : 0);

  struct Row {
    u64 n;
    bool passed;
  };
  std::vector<Row> rows;
  for (u64 n = lo; n <= nmax; ++n)
    rows.push_back({n, azkit::run_identity(*id, n)});

  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.passed ? 0 : 1;

  OutputStream os(output);
  std::ostream& out = os.get();
  const std::string name = azkit::to_string(*id);
  if (format == Format::Csv) {
    out << "identity_id,n,passed\n";
    for (const auto& r : rows)
      out << name << ',' << r.n << ',' << (r.passed ? "true" : "false")
          << '\n';
  } else if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["identity"] = name;
    doc["nmin"] = lo;
    doc["nmax"] = nmax;
    doc["summary"] = {{"total", rows.size()},
                      {"passed", rows.size() - failed},
                      {"failed", failed}};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n}, {"passed", r.passed}});
    doc["results"] = arr;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : rows)
      out << name << "  n=" << r.n << "  " << (r.passed ? "pass" : "FAIL")
          << '\n';
    out << "total " << rows.size() << "  passed " << rows.size() - failed
        << "  failed " << failed << '\n';
  }
  return failed == 0 ? 0 : 1;
}

int run_consistency_range(u64 pmin, u64 pmax, unsigned workers, bool exact,
                          Format format, const std::string& output) {
  auto rows = azkit::consistency_sweep(pmin, pmax, workers,
                                       exact ? EvalPath::Both : EvalPath::Fast);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.passed() ? 0 : 1;

  OutputStream os(output);
  std::ostream& out = os.get();
  if (format == Format::Csv) {
    out << "p,a1_vs_a4,a2_vs_a5,passed\n";
    for (const auto& r : rows)
      out << r.p << ',' << (r.a1_matches_a4 ? "true" : "false") << ','
          << (r.a2_matches_a5 ? "true" : "false") << ','
          << (r.passed() ? "true" : "false") << '\n';
  } else if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["pmin"] = pmin;
    doc["pmax"] = pmax;
    doc["summary"] = {{"total", rows.size()},
                      {"passed", rows.size() - failed},
                      {"failed", failed}};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"p", r.p},
                     {"a1_vs_a4", r.a1_matches_a4},
                     {"a2_vs_a5", r.a2_matches_a5},
                     {"passed", r.passed()}});
    doc["results"] = arr;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : rows)
      out << "p=" << r.p << "  a1_vs_a4=" << (r.a1_matches_a4 ? "ok" : "FAIL")
          << "  a2_vs_a5=" << (r.a2_matches_a5 ? "ok" : "FAIL") << '\n';
    out << "total " << rows.size() << "  passed " << rows.size() - failed
        << "  failed " << failed << '\n';
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact-arithmetic toolkit for the Almkvist-Zudilin numbers: sequence "
      "generators and machine verification of their congruences over prime "
      "ranges"};
  app.require_subcommand(1);

  std::string format_str = "table";
  std::string output;
  bool exact = false;
  bool timing = false;

  // ---- sweep ----
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "run congruence checks over a prime range");
  u64 sw_pmin = 5;
  std::optional<u64> sw_pmax;
  std::string sw_checks = "all";
  unsigned sw_workers = default_workers();
  sweep_cmd->add_option("--pmin", sw_pmin, "lower end of the prime range");
  sweep_cmd->add_option("--pmax", sw_pmax,
                        "upper end of the prime range (default 500, or 2000 "
                        "for --checks modp)");
  sweep_cmd->add_option("--checks", sw_checks,
                        "all, modp, modp3, or comma-separated ids");
  sweep_cmd->add_option("--workers", sw_workers, "parallel workers");
  sweep_cmd->add_flag("--exact", exact,
                      "cross-validate the residue fast path against the "
                      "exact-rational path");
  sweep_cmd->add_option("--format", format_str, "table, csv or json");
  sweep_cmd->add_option("--output", output, "write data to a file");
  sweep_cmd->add_flag("--timing", timing, "include elapsed time in output");

  // ---- check ----
  auto* check_cmd =
      app.add_subcommand("check", "run one congruence check at one prime");
  std::string ck_id;
  u64 ck_prime = 0;
  check_cmd->add_option("id", ck_id, "check id (A1 A2 A4 A5 NEW1 B2 B3 B4 B5 C3)")
      ->required();
  check_cmd->add_option("--prime", ck_prime, "prime p >= 5")->required();
  check_cmd->add_flag("--exact", exact, "cross-validate both paths");
  check_cmd->add_option("--format", format_str, "table, csv or json");
  check_cmd->add_option("--output", output, "write data to a file");
  check_cmd->add_flag("--timing", timing, "include elapsed time in output");

  // ---- identity ----
  auto* id_cmd = app.add_subcommand(
      "identity", "verify an exact identity over a range of n");
  std::string id_id;
  std::optional<u64> id_nmin;
  u64 id_nmax = 300;
  id_cmd->add_option("id", id_id, "identity id (IB1 or IC1)")->required();
  id_cmd->add_option("--nmin", id_nmin, "first n (default 0, or 1 for IC1)");
  id_cmd->add_option("--nmax", id_nmax, "last n");
  id_cmd->add_option("--format", format_str, "table, csv or json");
  id_cmd->add_option("--output", output, "write data to a file");

  // ---- consistency ----
  auto* cons_cmd = app.add_subcommand(
      "consistency",
      "verify that the two derivation chains compose: rhs(A1)=rhs(A4) and "
      "rhs(A2)=rhs(A5) mod p^3");
  u64 cons_pmin = 5, cons_pmax = 500;
  unsigned cons_workers = default_workers();
  cons_cmd->add_option("--pmin", cons_pmin, "lower end of the prime range");
  cons_cmd->add_option("--pmax", cons_pmax, "upper end of the prime range");
  cons_cmd->add_option("--workers", cons_workers, "parallel workers");
  cons_cmd->add_flag("--exact", exact, "cross-validate both paths");
  cons_cmd->add_option("--format", format_str, "table, csv or json");
  cons_cmd->add_option("--output", output, "write data to a file");

  // ---- compute ----
  auto* compute_cmd =
      app.add_subcommand("compute", "print sequence values, one per line");
  compute_cmd->require_subcommand(1);
  u64 g_nmax = 0, e_nmax = 0, h_nmax = 0, qp_prime = 0;
  std::optional<u64> e_mod;
  auto* g_cmd = compute_cmd->add_subcommand("g", "Almkvist-Zudilin G_0..G_N");
  g_cmd->add_option("--nmax", g_nmax, "last index")->required();
  auto* e_cmd = compute_cmd->add_subcommand("euler", "Euler numbers E_0..E_N");
  e_cmd->add_option("--nmax", e_nmax, "last index")->required();
  e_cmd->add_option("--mod", e_mod, "reduce mod a prime");
  auto* h_cmd =
      compute_cmd->add_subcommand("harmonic", "harmonic numbers H_0..H_N");
  h_cmd->add_option("--nmax", h_nmax, "last index")->required();
  auto* qp_cmd =
      compute_cmd->add_subcommand("qp2", "Fermat quotient (2^(p-1)-1)/p");
  qp_cmd->add_option("--prime", qp_prime, "odd prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format format = parse_format(format_str);
    if (app.got_subcommand(sweep_cmd)) {
      return run_sweep(sw_pmin, sw_pmax, sw_checks, sw_workers, exact, format,
                       output, timing);
    }
    if (app.got_subcommand(check_cmd)) {
      return run_single_check(ck_id, ck_prime, exact, format, output, timing);
    }
    if (app.got_subcommand(id_cmd)) {
      return run_identity_range(id_id, id_nmin, id_nmax, format, output);
    }
    if (app.got_subcommand(cons_cmd)) {
      return run_consistency_range(cons_pmin, cons_pmax, cons_workers, exact,
                                   format, output);
    }
    if (app.got_subcommand(compute_cmd)) {
      OutputStream os(output);
      std::ostream& out = os.get();
      if (compute_cmd->got_subcommand(g_cmd)) {
        azkit::SequenceCache seq;
        for (u64 n = 0; n <= g_nmax; ++n) out << seq.g(n).get_str() << '\n';
      } else if (compute_cmd->got_subcommand(e_cmd)) {
        if (e_mod) {
          const azkit::BigInt p(static_cast<unsigned long>(*e_mod));
          for (u64 n = 0; n <= e_nmax; ++n)
            out << azkit::euler_mod(n, p).value().get_str() << '\n';
        } else {
          azkit::SequenceCache seq;
          for (u64 n = 0; n <= e_nmax; ++n)
            out << seq.euler(n).get_str() << '\n';
        }
      } else if (compute_cmd->got_subcommand(h_cmd)) {
        azkit::SequenceCache seq;
        for (u64 n = 0; n <= h_nmax; ++n) out << seq.h(n).get_str() << '\n';
      } else if (compute_cmd->got_subcommand(qp_cmd)) {
        out << azkit::fermat_quotient2(
                   azkit::BigInt(static_cast<unsigned long>(qp_prime)))
                   .get_str()
            << '\n';
      }
      return 0;
    }
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const azkit::NotPrime& e) {
    std::cerr << "error: NotPrime: " << e.what() << '\n';
    return 3;
  } catch (const azkit::PrimeTooSmall& e) {
    std::cerr << "error: PrimeTooSmall: " << e.what() << '\n';
    return 3;
  } catch (const azkit::IllPosed& e) {
    std::cerr << "error: IllPosed: " << e.what() << '\n';
    return 3;
  } catch (const azkit::DenominatorDivisibleByP& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
