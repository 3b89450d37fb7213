#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suitlint/calltree.hpp"

namespace suitlint {

enum class ChangeKind {
    node_added,
    node_removed,
    node_modified,
    name_changed,
    argument_changed,
    value_changed,
};

enum class ChangeLevel { definition, statement, argument, variable };

const char* change_kind_name(ChangeKind k);
const char* change_level_name(ChangeLevel l);

// Surface of one statement, captured so matchers need no AST access.
struct StmtInfo {
    std::string kind;  // "call" | "conditional" | "loop"
    std::string callee;
    std::string callee_norm;
    std::vector<std::string> args;
    std::string norm;                       // statement-local type-2 normalization
    std::vector<std::string> nested_norms;  // direct nested statements (blocks)
};

struct FineGrainedChange {
    ChangeKind kind = ChangeKind::node_modified;
    ChangeLevel level = ChangeLevel::statement;
    NodeLoc before;  // empty file for pure additions
    NodeLoc after;   // empty file for pure removals
    StmtInfo before_stmt;
    StmtInfo after_stmt;
    std::string before_text;  // argument / variable values
    std::string after_text;
    bool before_is_literal = false;
    bool after_is_literal = false;
    std::string description;
};

struct DiffOptions {
    // A removed+added definition pair with an identical body counts as a
    // rename when at least this fraction of its callers is retargeted.
    double rename_caller_ratio = 0.8;
};

// Fine-grained changes between two snapshots of the same project.
// Definitions are matched by (file, name); statements inside matched
// definitions align by LCS over type-2 normalized tokens so that a
// literal-to-variable edit surfaces as a modification rather than a
// remove/add pair. Removal of a whole definition or block is reported as
// one change; its nested statements are not reported individually.
std::vector<FineGrainedChange> diff_snapshots(const Snapshot& v1, const Snapshot& v2,
                                              const DiffOptions& options = {});

}  // namespace suitlint
