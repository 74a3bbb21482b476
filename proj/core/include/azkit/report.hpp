#pragma once

#include <iosfwd>
#include <string>

#include "azkit/checks.hpp"

namespace azkit {

/// CSV with the fixed header check_id,p,m,lhs,rhs,passed,detail. Residues
/// print as canonical decimal representatives in [0, p^m), passed as
/// true/false, LF line endings. Fields are quoted only when they contain
/// a comma, quote or newline.
void write_csv(std::ostream& out, const SweepReport& report);

/// Single JSON document mirroring the CSV fields per result, plus the
/// modulus as a "p^m" string and a top-level summary
/// {total, passed, failed, elapsed_ms}. elapsed_ms is null unless
/// include_timing is set, keeping the bytes reproducible across runs.
void write_json(std::ostream& out, const SweepReport& report,
                bool include_timing = false);

/// Human-readable aligned table with the same rows and summary.
void write_table(std::ostream& out, const SweepReport& report,
                 bool include_timing = false);

std::string csv_escape(const std::string& field);

}  // namespace azkit
