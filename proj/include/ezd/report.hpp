#pragma once

#include <string>
#include <vector>

namespace ezd {

struct ReportRow {
    std::string index;
    std::string expected;
    std::string computed;
    bool pass = false;
};

// One verification scenario: hypothesis certification is tracked apart
// from the conclusion rows; overall pass needs both.
struct Report {
    std::string scenario;
    bool hypothesis_ok = true;
    std::string hypothesis_note;
    std::vector<ReportRow> rows;

    bool overall() const {
        if (!hypothesis_ok) return false;
        for (auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
    void add(const std::string& index, const std::string& expected,
             const std::string& computed) {
        rows.push_back({index, expected, computed, expected == computed});
    }
    void add_check(const std::string& index, const std::string& expected, bool pass) {
        rows.push_back({index, expected, pass ? expected : "violated", pass});
    }
};

enum class ReportFormat { text, csv };

std::string emit_report(const Report& r, ReportFormat f);
std::string emit_reports(const std::vector<Report>& rs, ReportFormat f);
std::string csv_header();

}  // namespace ezd
