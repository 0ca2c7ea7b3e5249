#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "warpcon/report.hpp"

namespace warpcon {

enum class ReportFormat { Json, Csv, Text };

inline ReportFormat format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown report format: " + s);
}

/// One row of the scattering phase/witness table.
struct PhaseTableRow {
  int d = 2;
  double mass = 1.0;
  double kappa = 1.0;
  std::string p, q;
  std::string direction;
  double phase_re = 1.0;
  double phase_im = 0.0;
  double witness = 0.0;
};

inline std::vector<CheckReport> sorted_by_id(std::vector<CheckReport> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return reports;
}

/// Canonical JSON rendering: reports sorted by id, runtimes zeroed so that
/// identical configurations produce byte-identical files.
inline std::string render_json(const std::vector<CheckReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("emit_report: empty report selection");
  nlohmann::json arr = nlohmann::json::array();
  for (CheckReport r : sorted_by_id(reports)) {
    r.runtime_ms = 0;
    arr.push_back(r);
  }
  return nlohmann::json{{"reports", arr}}.dump(2) + "\n";
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_csv(const std::vector<CheckReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("emit_report: empty report selection");
  std::ostringstream out;
  out << "check_id,anchor,residual,tol,pass,hard,note,params\n";
  out << std::setprecision(17);
  for (const CheckReport& r : sorted_by_id(reports))
    out << r.check_id << ',' << csv_escape(r.anchor) << ',' << r.residual << ',' << r.tolerance
        << ',' << (r.pass ? "true" : "false") << ',' << (r.hard ? "true" : "false") << ','
        << csv_escape(r.note) << ',' << csv_escape(r.params.dump()) << '\n';
  return out.str();
}

inline std::string render_text(const std::vector<CheckReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("emit_report: empty report selection");
  const auto sorted = sorted_by_id(reports);
  std::ostringstream out;
  out << std::setprecision(6);
  int passed = 0, hard_failed = 0;
  for (const CheckReport& r : sorted) {
    out << (r.pass ? "PASS " : (r.hard ? "FAIL " : "info ")) << std::left << std::setw(42)
        << r.check_id << " residual " << std::scientific << std::setw(13) << r.residual
        << " tol " << std::setw(10) << r.tolerance << std::defaultfloat << " (" << r.runtime_ms
        << " ms)";
    if (!r.note.empty()) out << "  -- " << r.note;
    out << '\n';
    if (r.pass) ++passed;
    if (!r.pass && r.hard) ++hard_failed;
  }
  out << '\n' << "claim traceability:\n";
  std::map<std::string, std::pair<int, int>> by_anchor;  // anchor -> (pass, total)
  for (const CheckReport& r : sorted) {
    auto& e = by_anchor[r.anchor];
    e.first += r.pass ? 1 : 0;
    e.second += 1;
  }
  for (const auto& [anchor, counts] : by_anchor)
    out << "  " << std::left << std::setw(70) << anchor << ' ' << counts.first << '/'
        << counts.second << '\n';
  out << '\n'
      << passed << '/' << sorted.size() << " checks pass; " << hard_failed
      << " hard failure(s)\n";
  return out.str();
}

inline std::string render_phase_csv(const std::vector<PhaseTableRow>& rows) {
  std::ostringstream out;
  out << "d,m,kappa,p,q,direction,phase_re,phase_im,witness\n";
  out << std::setprecision(17);
  for (const auto& r : rows)
    out << r.d << ',' << r.mass << ',' << r.kappa << ',' << csv_escape(r.p) << ','
        << csv_escape(r.q) << ',' << r.direction << ',' << r.phase_re << ',' << r.phase_im << ','
        << r.witness << '\n';
  return out.str();
}

inline std::string render_report(const std::vector<CheckReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return render_json(reports);
    case ReportFormat::Csv:
      return render_csv(reports);
    case ReportFormat::Text:
      return render_text(reports);
  }
  throw std::logic_error("unreachable");
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

inline bool all_hard_checks_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.hard && !r.pass) return false;
  return true;
}

}  // namespace warpcon
