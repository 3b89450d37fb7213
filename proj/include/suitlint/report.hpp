#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suitlint/analytics.hpp"
#include "suitlint/refactoring.hpp"

namespace suitlint {

// Fixed four-fraction-digit decimal with half-even rounding; the report's
// only floating-point text form.
std::string format_fixed4(double value);

enum class ReportFormat { json, csv };

struct ReportMeta {
    std::string tool = "suitlint";
    int format_version = 1;
    std::string mode;  // "snapshot" | "history"
    std::vector<std::string> roots;
    std::vector<std::string> smells;  // codes included in the report
    int long_step_threshold = 13;
    std::optional<KneeResult> derived_threshold;
    long long versions = 0;
    long long tests = 0;
};

struct FindingCell {
    std::string version;
    std::string test;
    std::string smell;
    long long count = 0;
    long long denominator = 0;
    bool absent = false;  // density undefined
    std::vector<std::string> nodes;
};

struct ChangeCell {
    std::string from_version;
    std::string to_version;
    std::string kind;
    std::string level;
    std::string location;  // before location, or the after location for additions
    std::string description;
};

struct ActionCell {
    std::string from_version;
    std::string to_version;
    std::string smell;
    std::string change_kind;
    std::string description;
    std::vector<std::string> nodes;
    std::vector<std::string> tests;
};

struct TimeseriesCell {
    std::string version;
    std::string smell;
    long long total_count = 0;
    long long symptomatic_tests = 0;
};

struct Report {
    ReportMeta meta;
    std::vector<FindingCell> findings;
    std::vector<ChangeCell> changes;
    std::vector<ActionCell> actions;
    std::vector<SmellRates> rates;
    std::vector<TimeseriesCell> timeseries;
    std::vector<DistributionSummary> summaries;
    std::map<std::string, std::vector<std::string>> rankings;  // statistic -> codes
};

// Serializations are byte-deterministic: fixed key order, fixed decimal
// formatting, rows pre-sorted by the caller.
std::string report_to_json(const Report& report);

// One CSV table per section, RFC-style quoting, header row first.
std::map<std::string, std::string> report_to_csv(const Report& report);

// JSON writes `destination` as a file; CSV treats it as a directory and
// writes one <table>.csv per section. Writes are atomic (temp + rename).
void emit_report(const Report& report, ReportFormat format, const std::string& destination);

// Minimal RFC-4180 reader, used to verify emitted tables round-trip.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

std::string csv_escape(const std::string& field);

}  // namespace suitlint
