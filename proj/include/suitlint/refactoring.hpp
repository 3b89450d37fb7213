#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "suitlint/diff.hpp"
#include "suitlint/smells.hpp"

namespace suitlint {

// All findings computed for one version.
struct VersionFindings {
    std::string version_id;
    std::map<std::string, std::vector<SmellFinding>> by_test;  // test key -> 16 findings

    const SmellFinding* find(const std::string& test_key, SmellId smell) const;
};

struct RefactoringAction {
    SmellId smell = SmellId::AoC;
    std::string from_version;
    std::string to_version;
    std::vector<NodeLoc> nodes;  // symptomatic nodes in the earlier version
    std::string change_kind;
    std::string description;
    std::set<std::string> tests;  // tests whose symptom the action removed
};

// Matches fine-grained changes against the per-smell refactoring patterns.
// An action is emitted only when (a) the change structurally fits the
// pattern, (b) the changed node was symptomatic in v1, and (c) the symptom
// is absent at the corresponding location in v2. Removing a parent of a
// symptomatic node, or deleting a whole test, matches nothing.
std::vector<RefactoringAction> match_refactorings(const Snapshot& v1, const Snapshot& v2,
                                                  const VersionFindings& f1,
                                                  const VersionFindings& f2,
                                                  const std::vector<FineGrainedChange>& changes,
                                                  const DetectorConfig& config);

struct SmellRates {
    SmellId smell = SmellId::AoC;
    long long action_count = 0;
    long long symptom_nodes = 0;  // symptoms summed across all versions
    double rate = 0;              // action_count / symptom_nodes
    long long tests_symptomatic = 0;  // tests ever showing the symptom
    long long tests_refactored = 0;   // of those, tests with >= 1 action
    double percent_refactored = 0;
};

std::vector<SmellRates> refactoring_rates(const std::vector<VersionFindings>& versions,
                                          const std::vector<RefactoringAction>& actions);

}  // namespace suitlint
