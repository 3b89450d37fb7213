#include <string>
#include <vector>

#include <CLI11.hpp>

#include "suitlint/config.hpp"
#include "suitlint/runner.hpp"
#include "suitlint/util.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "suitlint - smell metrics and refactoring mining for keyword-driven UI test suites"};

    std::string config_file;
    suitlint::ToolConfig flags;
    std::string extensions_csv, langs_csv, smells_csv;

    app.add_option("--config", config_file, "Configuration file (key = value lines)");
    app.add_option("--mode", flags.mode, "Analysis mode: snapshot or history")
        ->capture_default_str();
    app.add_option("--root", flags.roots,
                   "Project root (repeatable): a directory of test files, a git repository, "
                   "or a directory of version subdirectories in history mode");
    app.add_option("--catalog", flags.catalog_path,
                   "Keyword catalog override file merged over the built-in table");
    app.add_option("--format", flags.format, "Report format: json or csv")
        ->capture_default_str();
    app.add_option("--out", flags.out_path,
                   "Report destination: a file for json, a directory for csv; stdout when "
                   "omitted");
    app.add_option("--smells", smells_csv, "Comma-separated smell codes to report (default all)");
    app.add_option("--long-step-threshold", flags.long_step_threshold,
                   "Action count at which a step is long")
        ->capture_default_str();
    app.add_option("--threshold-derive", flags.threshold_derive,
                   "Derive a threshold from the corpus instead ('long-steps')");
    app.add_option("--langs", langs_csv, "Languages for pronoun detection (default en,fr)");
    app.add_option("--clone-type", flags.clone_type, "Clone granularity: type1 or type2")
        ->capture_default_str();
    app.add_option("--jobs", flags.jobs, "Worker threads; 0 = available parallelism")
        ->capture_default_str();
    app.add_option("--log-level", flags.log_level, "error, warn, info or debug")
        ->capture_default_str();
    app.add_option("--extensions", extensions_csv,
                   "Comma-separated test file extensions (default .robot,.txt,.resource)");
    app.add_option("--project-name", flags.project_name, "Project label used in history mode")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    suitlint::ToolConfig config;
    try {
        // Precedence: command-line flags > config file > built-in defaults.
        if (!config_file.empty()) suitlint::apply_config_file(config, config_file);
        auto given = [&](const char* name) { return app.count(name) > 0; };
        if (given("--mode")) config.mode = flags.mode;
        if (given("--root")) config.roots = flags.roots;
        if (given("--catalog")) config.catalog_path = flags.catalog_path;
        if (given("--format")) config.format = flags.format;
        if (given("--out")) config.out_path = flags.out_path;
        if (given("--long-step-threshold"))
            config.long_step_threshold = flags.long_step_threshold;
        if (given("--threshold-derive")) config.threshold_derive = flags.threshold_derive;
        if (given("--clone-type")) config.clone_type = flags.clone_type;
        if (given("--jobs")) config.jobs = flags.jobs;
        if (given("--log-level")) config.log_level = flags.log_level;
        if (given("--project-name")) config.project_name = flags.project_name;
        if (given("--extensions"))
            suitlint::apply_config_entry(config, "extensions", extensions_csv);
        if (given("--langs")) suitlint::apply_config_entry(config, "langs", langs_csv);
        if (given("--smells")) suitlint::apply_config_entry(config, "smells", smells_csv);
    } catch (const suitlint::ConfigError& e) {
        suitlint::log_message(suitlint::LogLevel::error, e.what());
        return 1;
    }

    return config.mode == "history" ? suitlint::run_history(config)
                                    : suitlint::run_snapshot(config);
}
