#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "suitlint/calltree.hpp"
#include "suitlint/catalog.hpp"
#include "suitlint/refactoring.hpp"
#include "suitlint/smells.hpp"

namespace suitlint::testsupport {

// Parses in-memory sources into a snapshot using the default catalog.
Snapshot parse_snapshot(const std::vector<std::pair<std::string, std::string>>& files,
                        const std::string& version = "v");

VersionFindings findings_of(const Snapshot& snapshot, const DetectorConfig& config = {});

const SmellFinding& finding(const VersionFindings& findings, const std::string& test_key,
                            SmellId smell);

// First test of the snapshot (most fixtures hold exactly one).
const CallTree& only_test(const Snapshot& snapshot);

const SmellFinding& detect_one(const Snapshot& snapshot, SmellId smell,
                               const DetectorConfig& config = {});

// Diffs two in-memory versions and matches refactoring patterns.
std::vector<RefactoringAction> replay_actions(
    const std::vector<std::pair<std::string, std::string>>& before,
    const std::vector<std::pair<std::string, std::string>>& after,
    const DetectorConfig& config = {});

// Path to a file under tests/data.
std::string data_file(const std::string& name);

// Two-version fixture applying exactly one refactoring pattern; replay
// must yield exactly one action of `smell` and zero others.
struct ReplayCase {
    SmellId smell = SmellId::AoC;
    std::string name;
    std::vector<std::pair<std::string, std::string>> before;
    std::vector<std::pair<std::string, std::string>> after;
};

// One scripted edit per refactoring pattern, all sixteen smells.
std::vector<ReplayCase> replay_cases();

// Deleting a whole symptomatic test: must yield zero actions.
ReplayCase whole_test_deletion_case();

}  // namespace suitlint::testsupport
