#pragma once

#include <map>
#include <string>
#include <vector>

namespace suitlint {

struct ProcessResult {
    int exit_code = -1;
    std::string output;  // captured stdout
};

// Runs a command without a shell, capturing stdout. stderr is inherited.
// extra_env entries are added to the child's environment.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::string& working_dir = "",
                          const std::map<std::string, std::string>& extra_env = {});

}  // namespace suitlint
