#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "suitlint/ast.hpp"
#include "suitlint/calltree.hpp"

namespace suitlint {

enum class CloneType { type1, type2 };

// Type-1: whitespace/case-normalized token equality.
// Type-2: additionally renames every variable token to a positional
// placeholder, so bodies differing only in variable names compare equal.
std::string normalize_body(const std::vector<CallStatement>& body, CloneType type);

// Same normalization for a single statement, with placeholder numbering
// local to the statement. This is the alignment key for snapshot diffing.
std::string normalize_statement(const CallStatement& stmt, CloneType type);

// Equivalence classes of user-keyword bodies. Only bodies with at least
// two statements participate; single-call keywords are the business of the
// delegation smells, not of clone detection.
class CloneIndex {
public:
    void add(const std::string& def_key, const std::vector<CallStatement>& body);
    void seal();  // finalizes the clone sets

    bool is_clone(const std::string& def_key, CloneType type) const;
    const std::set<std::string>& clone_set(CloneType type) const;
    std::vector<std::vector<std::string>> classes(CloneType type) const;

private:
    std::map<std::string, std::vector<std::string>> type1_groups_;
    std::map<std::string, std::vector<std::string>> type2_groups_;
    std::set<std::string> clones_type1_;
    std::set<std::string> clones_type2_;
};

CloneIndex find_clones(const Snapshot& snapshot);

}  // namespace suitlint
