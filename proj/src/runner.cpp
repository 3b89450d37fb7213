#include "suitlint/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <set>
#include <thread>

#include "suitlint/analytics.hpp"
#include "suitlint/catalog.hpp"
#include "suitlint/clones.hpp"
#include "suitlint/diff.hpp"
#include "suitlint/history.hpp"
#include "suitlint/parser.hpp"
#include "suitlint/refactoring.hpp"
#include "suitlint/util.hpp"

namespace fs = std::filesystem;

namespace suitlint {

namespace {

std::atomic<int> g_log_level{static_cast<int>(LogLevel::warn)};

const char* level_name(LogLevel level) {
    switch (level) {
        case LogLevel::error: return "error";
        case LogLevel::warn: return "warn";
        case LogLevel::info: return "info";
        case LogLevel::debug: return "debug";
    }
    return "?";
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        jobs = hw == 0 ? 1 : static_cast<int>(hw);
    }
    if (jobs == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    int count = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    for (int w = 0; w < count; ++w) {
        workers.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : workers) t.join();
}

std::string node_string(const NodeLoc& loc) {
    std::string out = loc.file + ":" + std::to_string(loc.line);
    if (!loc.label.empty()) {
        out += " ";
        out += loc.label;
    }
    if (loc.arg_index > 0) out += " arg " + std::to_string(loc.arg_index);
    if (loc.arg_index < 0) out += " embedded arg " + std::to_string(-loc.arg_index);
    return out;
}

std::string test_display(const TestId& id) { return id.file + "::" + id.name; }

struct VersionAnalysis {
    std::string version_id;
    VersionFindings findings;
    std::map<std::string, std::string> test_names;  // key -> display
};

VersionAnalysis detect_version(const Snapshot& snap, const DetectorConfig& config, int jobs) {
    VersionAnalysis out;
    out.version_id = snap.version_id;
    out.findings.version_id = snap.version_id;
    CloneIndex clones = find_clones(snap);

    std::vector<std::vector<SmellFinding>> results(snap.tests.size());
    parallel_for(snap.tests.size(), jobs, [&](std::size_t i) {
        results[i] = detect_all(*snap.tests[i], clones, config);
    });
    for (std::size_t i = 0; i < snap.tests.size(); ++i) {
        std::string key = snap.tests[i]->test_id.key();
        out.findings.by_test[key] = std::move(results[i]);
        out.test_names[key] = test_display(snap.tests[i]->test_id);
    }
    return out;
}

std::vector<double> step_action_counts(const Snapshot& snap) {
    std::vector<double> counts;
    for (const auto& tree : snap.tests)
        for (const CallNode* step : treeview::steps(*tree))
            counts.push_back(static_cast<double>(treeview::action_leaf_count(step)));
    return counts;
}

struct Pipeline {
    const ToolConfig& config;
    KeywordCatalog catalog;
    DetectorConfig detector;
    std::optional<KneeResult> derived;

    std::vector<std::shared_ptr<const Snapshot>> snapshots;
    std::vector<VersionAnalysis> versions;
    std::vector<RefactoringAction> actions;
    std::vector<ChangeCell> change_log;

    explicit Pipeline(const ToolConfig& cfg)
        : config(cfg), catalog(load_catalog(cfg.catalog_path)), detector(cfg.detector_config()) {}

    void derive_threshold_if_requested() {
        if (config.threshold_derive != "long-steps") return;
        std::vector<double> counts;
        for (const auto& snap : snapshots) {
            auto c = step_action_counts(*snap);
            counts.insert(counts.end(), c.begin(), c.end());
        }
        if (counts.size() < 3) {
            log_message(LogLevel::warn,
                        "not enough steps to derive the long-step threshold; keeping default");
            return;
        }
        KneeResult knee = knee_point(counts);
        derived = knee;
        detector.long_step_threshold =
            std::max(1, static_cast<int>(std::llround(knee.threshold)));
        if (knee.degenerate)
            log_message(LogLevel::warn, "degenerate step-length distribution; knee at the "
                                        "common value");
        log_message(LogLevel::info,
                    "derived long-step threshold " +
                        std::to_string(detector.long_step_threshold) + " at quantile " +
                        format_fixed4(knee.quantile));
    }

    void detect_all_versions() {
        versions.reserve(snapshots.size());
        for (const auto& snap : snapshots) {
            for (const Diagnostic& d : snap->diagnostics)
                log_message(LogLevel::warn, d.str());
            versions.push_back(detect_version(*snap, detector, config.jobs));
        }
    }

    void match_all_pairs() {
        for (std::size_t i = 0; i + 1 < snapshots.size(); ++i) {
            std::vector<FineGrainedChange> changes =
                diff_snapshots(*snapshots[i], *snapshots[i + 1]);
            for (const FineGrainedChange& c : changes) {
                ChangeCell cell;
                cell.from_version = snapshots[i]->version_id;
                cell.to_version = snapshots[i + 1]->version_id;
                cell.kind = change_kind_name(c.kind);
                cell.level = change_level_name(c.level);
                cell.location = node_string(c.before.file.empty() ? c.after : c.before);
                cell.description = c.description;
                change_log.push_back(std::move(cell));
            }
            std::vector<RefactoringAction> pair_actions =
                match_refactorings(*snapshots[i], *snapshots[i + 1], versions[i].findings,
                                   versions[i + 1].findings, changes, detector);
            actions.insert(actions.end(), pair_actions.begin(), pair_actions.end());
        }
    }

    Report assemble() const {
        Report report;
        std::vector<SmellId> selected = config.selected_smells();
        std::set<SmellId> selected_set(selected.begin(), selected.end());

        report.meta.mode = config.mode;
        report.meta.roots = config.roots;
        for (SmellId id : selected) report.meta.smells.push_back(smell_code(id));
        report.meta.long_step_threshold = detector.long_step_threshold;
        report.meta.derived_threshold = derived;
        report.meta.versions = static_cast<long long>(versions.size());

        std::set<std::string> all_tests;
        std::vector<FindingRecord> records;
        for (const VersionAnalysis& v : versions) {
            for (const auto& [key, findings] : v.findings.by_test) {
                all_tests.insert(key);
                for (const SmellFinding& f : findings) {
                    if (!selected_set.count(f.smell)) continue;
                    records.push_back(FindingRecord{v.version_id, key, f});
                    FindingCell cell;
                    cell.version = v.version_id;
                    cell.test = v.test_names.at(key);
                    cell.smell = smell_code(f.smell);
                    cell.count = f.count;
                    cell.denominator = f.denominator;
                    cell.absent = f.density_absent();
                    for (const NodeLoc& n : f.nodes) cell.nodes.push_back(node_string(n));
                    report.findings.push_back(std::move(cell));
                }
            }
        }
        report.meta.tests = static_cast<long long>(all_tests.size());

        for (const VersionAnalysis& v : versions) {
            for (SmellId id : selected) {
                TimeseriesCell cell;
                cell.version = v.version_id;
                cell.smell = smell_code(id);
                for (const auto& [key, findings] : v.findings.by_test) {
                    for (const SmellFinding& f : findings) {
                        if (f.smell != id) continue;
                        cell.total_count += f.count;
                        if (f.count >= 1) ++cell.symptomatic_tests;
                    }
                }
                report.timeseries.push_back(std::move(cell));
            }
        }

        report.changes = change_log;

        for (const RefactoringAction& a : actions) {
            if (!selected_set.count(a.smell)) continue;
            ActionCell cell;
            cell.from_version = a.from_version;
            cell.to_version = a.to_version;
            cell.smell = smell_code(a.smell);
            cell.change_kind = a.change_kind;
            cell.description = a.description;
            for (const NodeLoc& n : a.nodes) cell.nodes.push_back(node_string(n));
            cell.tests.assign(a.tests.begin(), a.tests.end());
            report.actions.push_back(std::move(cell));
        }

        std::vector<VersionFindings> findings_only;
        for (const VersionAnalysis& v : versions) findings_only.push_back(v.findings);
        for (const SmellRates& r : refactoring_rates(findings_only, actions))
            if (selected_set.count(r.smell)) report.rates.push_back(r);

        for (const DistributionSummary& s : summarize(records))
            if (selected_set.count(s.smell)) report.summaries.push_back(s);

        std::map<SmellId, double> mean_count, mean_density, percent;
        for (const DistributionSummary& s : report.summaries) {
            mean_count[s.smell] = s.count_stats.mean;
            mean_density[s.smell] = s.density_stats.mean;
            percent[s.smell] = s.percent_symptomatic;
        }
        report.rankings["mean_count"] = ranking_by(mean_count);
        report.rankings["mean_density"] = ranking_by(mean_density);
        report.rankings["percent_symptomatic"] = ranking_by(percent);
        return report;
    }
};

std::vector<std::shared_ptr<SuiteAst>> load_snapshot_files(const ToolConfig& config,
                                                           std::vector<Diagnostic>& diags) {
    std::vector<std::shared_ptr<SuiteAst>> asts;
    bool prefix = config.roots.size() > 1;
    for (const std::string& root : config.roots) {
        if (!fs::exists(root)) throw IoError("path does not exist: " + root);
        std::vector<std::pair<std::string, std::string>> files;  // disk path, display
        std::string root_name = fs::path(root).filename().string();
        if (root_name.empty()) root_name = fs::path(root).parent_path().filename().string();
        if (fs::is_regular_file(root)) {
            files.emplace_back(root, fs::path(root).filename().string());
        } else {
            for (const auto& entry : fs::recursive_directory_iterator(root)) {
                if (!entry.is_regular_file()) continue;
                std::string rel = fs::relative(entry.path(), root).generic_string();
                if (!extension_matches(rel, config.extensions)) continue;
                files.emplace_back(entry.path().string(),
                                   prefix ? root_name + "/" + rel : rel);
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& [disk, display] : files) {
            try {
                SourceFile f = SourceFile::load(disk, display);
                asts.push_back(std::make_shared<SuiteAst>(parse_file(f)));
            } catch (const EncodingError& e) {
                diags.push_back(Diagnostic{display, 0, Severity::error, e.what()});
            }
        }
    }
    return asts;
}

int run_common(const ToolConfig& config, bool history) {
    set_log_level(config.log_level);
    try {
        config.validate();
    } catch (const ConfigError& e) {
        log_message(LogLevel::error, e.what());
        return 1;
    }
    try {
        Report report = history ? analyze_history(config) : analyze_snapshot(config);
        if (config.out_path.empty()) {
            std::cout << report_to_json(report);
        } else {
            emit_report(report, config.format == "json" ? ReportFormat::json : ReportFormat::csv,
                        config.out_path);
            log_message(LogLevel::info, "report written to " + config.out_path);
        }
        return 0;
    } catch (const Error& e) {
        log_message(LogLevel::error, e.what());
        return 2;
    }
}

}  // namespace

void set_log_level(const std::string& name) {
    if (name == "error") g_log_level = 0;
    else if (name == "warn") g_log_level = 1;
    else if (name == "info") g_log_level = 2;
    else if (name == "debug") g_log_level = 3;
}

void log_message(LogLevel level, const std::string& message) {
    if (static_cast<int>(level) > g_log_level.load()) return;
    std::cerr << "suitlint: " << level_name(level) << ": " << message << "\n";
}

Report analyze_snapshot(const ToolConfig& config) {
    Pipeline pipe(config);
    std::vector<Diagnostic> load_diags;
    auto asts = load_snapshot_files(config, load_diags);
    auto snap = std::make_shared<Snapshot>(build_snapshot(std::move(asts), pipe.catalog, "current"));
    for (const Diagnostic& d : load_diags) snap->diagnostics.push_back(d);
    pipe.snapshots.push_back(snap);
    pipe.derive_threshold_if_requested();
    pipe.detect_all_versions();
    return pipe.assemble();
}

Report analyze_history(const ToolConfig& config) {
    Pipeline pipe(config);
    ProjectHistory history =
        walk_repository(config.project_name, config.roots, config.extensions, pipe.catalog);
    for (const VersionRecord& record : history.records())
        pipe.snapshots.push_back(history.materialize(record));
    if (pipe.snapshots.size() < 2)
        log_message(LogLevel::warn,
                    "single analyzable version; refactoring analysis will be empty");
    pipe.derive_threshold_if_requested();
    pipe.detect_all_versions();
    pipe.match_all_pairs();
    return pipe.assemble();
}

int run_snapshot(const ToolConfig& config) { return run_common(config, false); }
int run_history(const ToolConfig& config) { return run_common(config, true); }

}  // namespace suitlint
