#pragma once

#include <iosfwd>
#include <span>
#include <string_view>

#include "qres/record.hpp"
#include "qres/verifier.hpp"

namespace qres {

enum class ReportFormat { json_lines, csv };

// Throws DomainError for anything other than "json-lines" or "csv".
[[nodiscard]] ReportFormat parse_report_format(std::string_view name);

// One line per record, LF terminated. Throws Error if the stream goes bad.
void emit_report(std::span<const VerificationRecord> records, ReportFormat format, std::ostream& out);

// 0 when every record holds, 1 otherwise. Usage errors (2) never reach a result.
[[nodiscard]] int sweep_exit_code(const SweepResult& result) noexcept;

// Human-readable pass/fail/skip table, skip reasons and counterexample lines.
void emit_summary(const SweepResult& result, std::ostream& out);

}  // namespace qres
