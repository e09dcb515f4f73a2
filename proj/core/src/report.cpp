#include "qres/report.hpp"

#include <iomanip>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qres/error.hpp"

namespace qres {

namespace {

std::string flatten(const Params& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json-lines") return ReportFormat::json_lines;
  if (name == "csv") return ReportFormat::csv;
  throw DomainError("unknown report format '" + std::string(name) + "'");
}

void emit_report(std::span<const VerificationRecord> records, ReportFormat format, std::ostream& out) {
  if (records.empty()) return;
  if (format == ReportFormat::csv) {
    out << "item,p,params,lhs,rhs,ok,elapsed_us\n";
    for (const auto& r : records) {
      out << r.item << ',' << r.p << ',' << flatten(r.params) << ',' << r.lhs << ',' << r.rhs << ','
          << (r.ok ? "true" : "false") << ',' << r.elapsed_us << '\n';
    }
  } else {
    for (const auto& r : records) {
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.params) params[k] = v;
      nlohmann::ordered_json line;
      line["item"] = r.item;
      line["p"] = r.p;
      line["params"] = std::move(params);
      line["lhs"] = r.lhs;
      line["rhs"] = r.rhs;
      line["ok"] = r.ok;
      line["elapsed_us"] = r.elapsed_us;
      out << line.dump() << '\n';
    }
  }
  out.flush();
  if (!out) throw Error("failed writing report");
}

int sweep_exit_code(const SweepResult& result) noexcept { return result.failures() == 0 ? 0 : 1; }

void emit_summary(const SweepResult& result, std::ostream& out) {
  out << std::left << std::setw(12) << "item" << std::right << std::setw(9) << "pass" << std::setw(9) << "fail"
      << std::setw(9) << "skip" << '\n';
  for (const auto& s : result.summary) {
    out << std::left << std::setw(12) << s.item << std::right << std::setw(9) << s.pass << std::setw(9) << s.fail
        << std::setw(9) << s.skip << '\n';
  }
  for (const auto& k : result.skips) {
    out << "skip " << k.item << " p=" << k.p;
    if (!k.params.empty()) out << " [" << flatten(k.params) << ']';
    out << ": " << k.reason << '\n';
  }
  for (const auto& r : result.records) {
    if (r.ok) continue;
    out << "COUNTEREXAMPLE " << r.item << " p=" << r.p;
    if (!r.params.empty()) out << " [" << flatten(r.params) << ']';
    out << " lhs=" << r.lhs << " rhs=" << r.rhs << '\n';
  }
}

}  // namespace qres
