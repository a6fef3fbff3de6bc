#include "ezd/report.hpp"

#include <sstream>

namespace ezd {

std::string csv_header() { return "scenario,hypothesis,index,expected,computed,pass"; }

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_one(std::ostringstream& os, const Report& r, ReportFormat f) {
    const std::string hyp = r.hypothesis_ok ? "certified" : "failed";
    if (f == ReportFormat::csv) {
        for (auto& row : r.rows)
            os << csv_escape(r.scenario) << ',' << hyp << ',' << csv_escape(row.index) << ','
               << csv_escape(row.expected) << ',' << csv_escape(row.computed) << ','
               << (row.pass ? "true" : "false") << '\n';
        if (r.rows.empty())
            os << csv_escape(r.scenario) << ',' << hyp << ",,,,"
               << (r.overall() ? "true" : "false") << '\n';
        return;
    }
    os << "== " << r.scenario << " ==\n";
    os << "hypothesis: " << hyp;
    if (!r.hypothesis_note.empty()) os << " (" << r.hypothesis_note << ")";
    os << '\n';
    for (auto& row : r.rows)
        os << "  " << row.index << ": expected " << row.expected << ", computed "
           << row.computed << " [" << (row.pass ? "pass" : "FAIL") << "]\n";
    os << "overall: " << (r.overall() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat f) {
    std::ostringstream os;
    if (f == ReportFormat::csv) os << csv_header() << '\n';
    emit_one(os, r, f);
    return os.str();
}

std::string emit_reports(const std::vector<Report>& rs, ReportFormat f) {
    std::ostringstream os;
    if (f == ReportFormat::csv) os << csv_header() << '\n';
    for (auto& r : rs) emit_one(os, r, f);
    return os.str();
}

}  // namespace ezd
