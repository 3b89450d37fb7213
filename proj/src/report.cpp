#include "suitlint/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "suitlint/util.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace suitlint {

std::string format_fixed4(double value) {
    // std::nearbyint honors the default FE_TONEAREST mode: ties to even.
    double scaled = std::nearbyint(value * 10000.0);
    long long units = static_cast<long long>(scaled);
    bool negative = units < 0;
    if (negative) units = -units;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s%lld.%04lld", negative ? "-" : "", units / 10000,
                  units % 10000);
    return buf;
}

namespace {

std::string density_text(long long count, long long denominator, bool absent) {
    if (absent) return "";
    return format_fixed4(static_cast<double>(count) / static_cast<double>(denominator));
}

ordered_json stats_json(const Stats& s) {
    ordered_json j;
    j["n"] = s.n;
    j["mean"] = format_fixed4(s.mean);
    j["min"] = format_fixed4(s.min);
    j["q1"] = format_fixed4(s.q1);
    j["median"] = format_fixed4(s.median);
    j["q3"] = format_fixed4(s.q3);
    j["max"] = format_fixed4(s.max);
    return j;
}

std::string join_list(const std::vector<std::string>& items) { return join(items, "; "); }

void write_atomic(const std::string& path, const std::string& content) {
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw WriteError("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw WriteError("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw WriteError("rename failed: " + target.string() + ": " + ec.message());
}

}  // namespace

std::string csv_escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"' && field.empty() && !field_started) {
            quoted = true;
            field_started = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            field_started = false;
        } else if (c == '\n') {
            if (!field.empty() || field_started || !row.empty()) {
                row.push_back(std::move(field));
                field.clear();
                field_started = false;
                rows.push_back(std::move(row));
                row.clear();
            }
        } else if (c == '\r') {
            // swallowed; \r\n handled by the \n branch
        } else {
            field += c;
            field_started = true;
        }
    }
    if (!field.empty() || field_started || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string report_to_json(const Report& report) {
    ordered_json j;
    ordered_json meta;
    meta["tool"] = report.meta.tool;
    meta["format_version"] = report.meta.format_version;
    meta["mode"] = report.meta.mode;
    meta["roots"] = report.meta.roots;
    meta["smells"] = report.meta.smells;
    meta["long_step_threshold"] = report.meta.long_step_threshold;
    if (report.meta.derived_threshold) {
        ordered_json d;
        d["quantile"] = format_fixed4(report.meta.derived_threshold->quantile);
        d["threshold"] = format_fixed4(report.meta.derived_threshold->threshold);
        d["score"] = format_fixed4(report.meta.derived_threshold->score);
        d["degenerate"] = report.meta.derived_threshold->degenerate;
        meta["derived_threshold"] = d;
    }
    meta["versions"] = report.meta.versions;
    meta["tests"] = report.meta.tests;
    j["meta"] = meta;

    ordered_json findings = ordered_json::array();
    for (const auto& f : report.findings) {
        ordered_json row;
        row["version"] = f.version;
        row["test"] = f.test;
        row["smell"] = f.smell;
        row["count"] = f.count;
        row["denominator"] = f.denominator;
        row["density"] = f.absent ? ordered_json(nullptr)
                                  : ordered_json(density_text(f.count, f.denominator, false));
        row["nodes"] = f.nodes;
        findings.push_back(row);
    }
    j["findings"] = findings;

    ordered_json changes = ordered_json::array();
    for (const auto& c : report.changes) {
        ordered_json row;
        row["from_version"] = c.from_version;
        row["to_version"] = c.to_version;
        row["kind"] = c.kind;
        row["level"] = c.level;
        row["location"] = c.location;
        row["description"] = c.description;
        changes.push_back(row);
    }
    j["changes"] = changes;

    ordered_json actions = ordered_json::array();
    for (const auto& a : report.actions) {
        ordered_json row;
        row["from_version"] = a.from_version;
        row["to_version"] = a.to_version;
        row["smell"] = a.smell;
        row["change_kind"] = a.change_kind;
        row["description"] = a.description;
        row["nodes"] = a.nodes;
        row["tests"] = a.tests;
        actions.push_back(row);
    }
    j["actions"] = actions;

    ordered_json rates = ordered_json::array();
    for (const auto& r : report.rates) {
        ordered_json row;
        row["smell"] = smell_code(r.smell);
        row["actions"] = r.action_count;
        row["symptom_nodes"] = r.symptom_nodes;
        row["rate"] = format_fixed4(r.rate);
        row["tests_symptomatic"] = r.tests_symptomatic;
        row["tests_refactored"] = r.tests_refactored;
        row["percent_refactored"] = format_fixed4(r.percent_refactored);
        rates.push_back(row);
    }
    j["rates"] = rates;

    ordered_json series = ordered_json::array();
    for (const auto& t : report.timeseries) {
        ordered_json row;
        row["version"] = t.version;
        row["smell"] = t.smell;
        row["total_count"] = t.total_count;
        row["symptomatic_tests"] = t.symptomatic_tests;
        series.push_back(row);
    }
    j["timeseries"] = series;

    ordered_json summaries = ordered_json::array();
    for (const auto& s : report.summaries) {
        ordered_json row;
        row["smell"] = smell_code(s.smell);
        row["tests_analyzed"] = s.tests_analyzed;
        row["tests_symptomatic"] = s.tests_symptomatic;
        row["percent_symptomatic"] = format_fixed4(s.percent_symptomatic);
        row["count_stats"] = stats_json(s.count_stats);
        row["density_stats"] = stats_json(s.density_stats);
        summaries.push_back(row);
    }
    j["summaries"] = summaries;

    ordered_json rankings;
    for (const auto& [stat, codes] : report.rankings) rankings[stat] = codes;
    j["rankings"] = rankings;

    return j.dump(2) + "\n";
}

std::map<std::string, std::string> report_to_csv(const Report& report) {
    std::map<std::string, std::string> tables;
    auto row = [](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cells[i]);
        }
        out += '\n';
        return out;
    };

    {
        std::string t = row({"version", "test", "smell", "count", "denominator", "density",
                             "nodes"});
        for (const auto& f : report.findings)
            t += row({f.version, f.test, f.smell, std::to_string(f.count),
                      std::to_string(f.denominator), density_text(f.count, f.denominator, f.absent),
                      join_list(f.nodes)});
        tables["findings"] = t;
    }
    {
        std::string t =
            row({"from_version", "to_version", "kind", "level", "location", "description"});
        for (const auto& c : report.changes)
            t += row({c.from_version, c.to_version, c.kind, c.level, c.location, c.description});
        tables["changes"] = t;
    }
    {
        std::string t = row({"from_version", "to_version", "smell", "change_kind", "description",
                             "nodes", "tests"});
        for (const auto& a : report.actions)
            t += row({a.from_version, a.to_version, a.smell, a.change_kind, a.description,
                      join_list(a.nodes), join_list(a.tests)});
        tables["actions"] = t;
    }
    {
        std::string t = row({"smell", "actions", "symptom_nodes", "rate", "tests_symptomatic",
                             "tests_refactored", "percent_refactored"});
        for (const auto& r : report.rates)
            t += row({smell_code(r.smell), std::to_string(r.action_count),
                      std::to_string(r.symptom_nodes), format_fixed4(r.rate),
                      std::to_string(r.tests_symptomatic), std::to_string(r.tests_refactored),
                      format_fixed4(r.percent_refactored)});
        tables["rates"] = t;
    }
    {
        std::string t = row({"version", "smell", "total_count", "symptomatic_tests"});
        for (const auto& s : report.timeseries)
            t += row({s.version, s.smell, std::to_string(s.total_count),
                      std::to_string(s.symptomatic_tests)});
        tables["timeseries"] = t;
    }
    {
        std::string t = row({"smell", "tests_analyzed", "tests_symptomatic",
                             "percent_symptomatic", "count_mean", "count_min", "count_q1",
                             "count_median", "count_q3", "count_max", "density_mean",
                             "density_min", "density_q1", "density_median", "density_q3",
                             "density_max"});
        for (const auto& s : report.summaries)
            t += row({smell_code(s.smell), std::to_string(s.tests_analyzed),
                      std::to_string(s.tests_symptomatic), format_fixed4(s.percent_symptomatic),
                      format_fixed4(s.count_stats.mean), format_fixed4(s.count_stats.min),
                      format_fixed4(s.count_stats.q1), format_fixed4(s.count_stats.median),
                      format_fixed4(s.count_stats.q3), format_fixed4(s.count_stats.max),
                      format_fixed4(s.density_stats.mean), format_fixed4(s.density_stats.min),
                      format_fixed4(s.density_stats.q1), format_fixed4(s.density_stats.median),
                      format_fixed4(s.density_stats.q3), format_fixed4(s.density_stats.max)});
        tables["summaries"] = t;
    }
    {
        std::string t = row({"key", "value"});
        t += row({"tool", report.meta.tool});
        t += row({"format_version", std::to_string(report.meta.format_version)});
        t += row({"mode", report.meta.mode});
        t += row({"roots", join_list(report.meta.roots)});
        t += row({"smells", join_list(report.meta.smells)});
        t += row({"long_step_threshold", std::to_string(report.meta.long_step_threshold)});
        if (report.meta.derived_threshold) {
            t += row({"derived_threshold", format_fixed4(report.meta.derived_threshold->threshold)});
            t += row({"derived_quantile", format_fixed4(report.meta.derived_threshold->quantile)});
        }
        t += row({"versions", std::to_string(report.meta.versions)});
        t += row({"tests", std::to_string(report.meta.tests)});
        for (const auto& [stat, codes] : report.rankings)
            t += row({"ranking_" + stat, join_list(codes)});
        tables["meta"] = t;
    }
    return tables;
}

void emit_report(const Report& report, ReportFormat format, const std::string& destination) {
    if (format == ReportFormat::json) {
        write_atomic(destination, report_to_json(report));
        return;
    }
    fs::create_directories(destination);
    for (const auto& [name, content] : report_to_csv(report))
        write_atomic((fs::path(destination) / (name + ".csv")).string(), content);
}

}  // namespace suitlint
