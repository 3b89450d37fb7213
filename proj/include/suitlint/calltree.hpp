#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "suitlint/ast.hpp"
#include "suitlint/catalog.hpp"

namespace suitlint {

// Structural address of a node, stable across snapshots of the same code.
// Two versions of one statement produce equal keys, which is what change
// matching relies on. Line numbers are carried for reporting only.
struct NodeLoc {
    std::string file;
    std::string owner_kind;      // "test" | "keyword" | "settings" | "variables"
    std::string owner;           // normalized test/keyword/setting/variable name
    std::string slot;            // "body" | "setup" | "teardown"
    std::vector<int> stmt_path;  // statement indices through nested blocks
    int arg_index = 0;           // 0 = the call itself, >0 = argument ordinal
    int line = 0;
    std::string label;           // human-readable description

    std::string key() const;
};

enum class ArgKind { hardcoded, variable, computed };
enum class ArgRole { none, locator, expected, configuration };

// Which subtree of the test an occurrence belongs to. This is a property
// of the expansion, not of the defining statement: one keyword may be
// reached from both the body and a fixture.
enum class TreeScope { body, setup, teardown };

const char* arg_role_name(ArgRole r);

// One syntactic argument occurrence at a call site.
struct ArgSlot {
    std::string text;  // raw cell text
    ArgKind kind = ArgKind::hardcoded;
    ArgRole role = ArgRole::none;
    std::set<std::string> resolved_values;
    NodeLoc loc;
    TreeScope scope = TreeScope::body;
};

// Argument entity of the tree model. Occurrences referring to the same
// variable (by normalized name) or the same literal value collapse into a
// single node, mirroring a model where variables are first-class nodes.
struct ArgumentNode {
    struct Occurrence {
        NodeLoc loc;
        TreeScope scope = TreeScope::body;
    };

    std::string display;  // variable reference or literal text
    ArgKind kind = ArgKind::hardcoded;
    ArgRole role = ArgRole::none;
    std::set<std::string> resolved_values;
    std::vector<Occurrence> occurrences;  // in first-seen order

    const NodeLoc& canonical_loc() const { return occurrences.front().loc; }
    bool in_scope(TreeScope s) const {
        for (const auto& o : occurrences)
            if (o.scope == s) return true;
        return false;
    }
};

struct UserKeywordDef {
    std::string file;
    std::string name;
    std::string normalized_name;
    std::vector<std::string> declared_arguments;
    const UserKeywordAst* ast = nullptr;
    bool embedded_arguments = false;

    std::string key() const { return file + "|" + normalized_name; }
};

enum class NodeKind {
    root,         // the test case itself
    user_call,    // resolved call to a user keyword
    library_call, // resolved call to a catalog keyword
    unresolved,   // callee not found, or a cycle back-edge
    marker        // control-flow construct (conditional branch or loop)
};

struct CallNode {
    NodeKind kind = NodeKind::unresolved;
    std::string name;           // callee as written (or test/marker name)
    std::string resolved_name;  // normalized resolution target
    std::optional<Category> category;  // library calls only
    std::set<EntryFlag> flags;         // copied from the catalog entry
    bool conditional_marker = false;   // marker kind: conditional vs loop
    const UserKeywordDef* def = nullptr;  // user calls
    std::string def_key;                  // user calls: stable definition id
    std::vector<CallNode*> children;
    std::vector<ArgSlot> args;
    int depth = 0;
    NodeLoc loc;
    TreeScope scope = TreeScope::body;

    bool is_library() const { return kind == NodeKind::library_call; }
    bool is_user() const { return kind == NodeKind::user_call; }
    bool is_marker() const { return kind == NodeKind::marker; }
    bool has_category(Category c) const { return category && *category == c; }
};

struct TestId {
    std::string file;
    std::string name;

    std::string key() const;
    bool operator<(const TestId& o) const { return key() < o.key(); }
};

class CallTree {
public:
    TestId test_id;
    CallNode* root = nullptr;
    std::vector<CallNode*> setup_roots;     // suite setup, then per-test setup
    std::vector<CallNode*> teardown_roots;  // per-test teardown, then suite teardown

    CallNode* new_node();
    // Registers one argument occurrence, folding it into the matching
    // argument entity. Exposed so synthetic trees can be assembled in tests.
    void register_argument(const ArgSlot& slot);

    const std::vector<const CallNode*>& nodes() const { return node_order_; }
    const std::vector<const ArgumentNode*>& argument_nodes() const { return arg_order_; }

private:
    std::deque<CallNode> node_storage_;
    std::vector<const CallNode*> node_order_;
    std::map<std::string, ArgumentNode> arg_entities_;
    std::vector<const ArgumentNode*> arg_order_;
};

struct Snapshot {
    std::string version_id;
    std::vector<std::shared_ptr<SuiteAst>> files;
    std::vector<std::unique_ptr<UserKeywordDef>> keywords;
    std::vector<std::unique_ptr<CallTree>> tests;
    std::vector<Diagnostic> diagnostics;

    const SuiteAst* find_file(const std::string& path) const;
    const UserKeywordDef* find_keyword(const std::string& key) const;
};

// Resolves all test cases of one version into call trees. Resolution
// searches the defining file first, then the other files of the snapshot,
// then the catalog; names are matched BDD-prefix-stripped and
// embedded-argument aware. Throws DuplicateTestIdError.
Snapshot build_snapshot(std::vector<std::shared_ptr<SuiteAst>> asts,
                        const KeywordCatalog& catalog, std::string version_id = "");

// All literal values the argument can statically take within its test.
std::set<std::string> resolve_argument_values(const CallTree& tree, const ArgumentNode& arg);

}  // namespace suitlint
