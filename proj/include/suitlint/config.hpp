#pragma once

#include <string>
#include <vector>

#include "suitlint/smells.hpp"

namespace suitlint {

struct ToolConfig {
    std::string mode = "snapshot";  // "snapshot" | "history"
    std::vector<std::string> roots;
    std::string catalog_path;
    std::vector<std::string> extensions = {".robot", ".txt", ".resource"};
    int long_step_threshold = 13;
    std::vector<std::string> languages = {"en", "fr"};
    std::string clone_type = "type2";
    std::string format = "json";
    std::string out_path;
    std::vector<std::string> smells;  // empty = all sixteen
    std::string threshold_derive;     // "" or "long-steps"
    int jobs = 0;                     // 0 = available parallelism
    std::string log_level = "warn";
    std::string project_name = "project";

    void validate() const;  // throws ConfigError
    DetectorConfig detector_config() const;
    std::vector<SmellId> selected_smells() const;
};

// Line-oriented `key = value` configuration file; keys mirror the flags.
// Unknown keys are fatal.
void apply_config_file(ToolConfig& config, const std::string& path);
void apply_config_entry(ToolConfig& config, const std::string& key, const std::string& value);

}  // namespace suitlint
