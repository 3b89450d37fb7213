#include "suitlint/config.hpp"

#include <fstream>

#include "suitlint/util.hpp"

namespace suitlint {

void ToolConfig::validate() const {
    if (mode != "snapshot" && mode != "history")
        throw ConfigError("mode must be 'snapshot' or 'history'");
    if (roots.empty()) throw ConfigError("at least one --root is required");
    if (long_step_threshold < 1) throw ConfigError("long-step threshold must be >= 1");
    if (clone_type != "type1" && clone_type != "type2")
        throw ConfigError("clone-type must be 'type1' or 'type2'");
    if (format != "json" && format != "csv") throw ConfigError("format must be 'json' or 'csv'");
    if (!threshold_derive.empty() && threshold_derive != "long-steps")
        throw ConfigError("threshold-derive supports only 'long-steps'");
    if (jobs < 0) throw ConfigError("jobs must be >= 0");
    if (log_level != "error" && log_level != "warn" && log_level != "info" &&
        log_level != "debug")
        throw ConfigError("log-level must be error, warn, info or debug");
    for (const std::string& s : smells) smell_from_code(s);      // throws on bad code
    DetectorConfig probe = detector_config();
    probe.enabled_pronouns();                                    // throws on bad language
}

DetectorConfig ToolConfig::detector_config() const {
    DetectorConfig dc;
    dc.long_step_threshold = long_step_threshold;
    dc.languages = languages;
    dc.clone_type = clone_type == "type1" ? CloneType::type1 : CloneType::type2;
    return dc;
}

std::vector<SmellId> ToolConfig::selected_smells() const {
    if (smells.empty()) return all_smells();
    std::vector<SmellId> out;
    for (SmellId id : all_smells()) {
        for (const std::string& code : smells) {
            if (iequals(code, smell_code(id))) {
                out.push_back(id);
                break;
            }
        }
    }
    return out;
}

namespace {

std::vector<std::string> parse_list(const std::string& value) {
    std::vector<std::string> out;
    for (const std::string& item : split(value, ',')) {
        std::string t = trim(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        int v = std::stoi(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for '" + key + "': " + value);
    }
}

}  // namespace

void apply_config_entry(ToolConfig& config, const std::string& key, const std::string& value) {
    if (key == "mode") config.mode = value;
    else if (key == "root") config.roots = parse_list(value);
    else if (key == "catalog") config.catalog_path = value;
    else if (key == "extensions") config.extensions = parse_list(value);
    else if (key == "long-step-threshold") config.long_step_threshold = parse_int(key, value);
    else if (key == "langs") config.languages = parse_list(value);
    else if (key == "clone-type") config.clone_type = value;
    else if (key == "format") config.format = value;
    else if (key == "out") config.out_path = value;
    else if (key == "smells") config.smells = parse_list(value);
    else if (key == "threshold-derive") config.threshold_derive = value;
    else if (key == "jobs") config.jobs = parse_int(key, value);
    else if (key == "log-level") config.log_level = value;
    else if (key == "project-name") config.project_name = value;
    else throw ConfigError("unknown configuration key: " + key);
}

void apply_config_file(ToolConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        apply_config_entry(config, key, value);
    }
}

}  // namespace suitlint
