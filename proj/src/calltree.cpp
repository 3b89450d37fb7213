#include "suitlint/calltree.hpp"

#include <algorithm>
#include <regex>

#include "suitlint/parser.hpp"
#include "suitlint/util.hpp"

namespace suitlint {

namespace {
constexpr int kMaxVariableDepth = 16;
constexpr std::size_t kMaxValueCombinations = 64;
}  // namespace

std::string NodeLoc::key() const {
    std::string k = file;
    k += '|';
    k += owner_kind;
    k += '|';
    k += owner;
    k += '|';
    k += slot;
    k += '|';
    for (int i : stmt_path) {
        k += std::to_string(i);
        k += '.';
    }
    k += '|';
    k += std::to_string(arg_index);
    return k;
}

const char* arg_role_name(ArgRole r) {
    switch (r) {
        case ArgRole::none: return "none";
        case ArgRole::locator: return "locator";
        case ArgRole::expected: return "expected";
        case ArgRole::configuration: return "configuration";
    }
    return "?";
}

std::string TestId::key() const { return file + "|" + normalize_keyword_name(name); }

CallNode* CallTree::new_node() {
    node_storage_.emplace_back();
    CallNode* n = &node_storage_.back();
    node_order_.push_back(n);
    return n;
}

void CallTree::register_argument(const ArgSlot& slot) {
    std::string key;
    switch (slot.kind) {
        case ArgKind::hardcoded:
            key = "lit|" + slot.text;
            break;
        case ArgKind::variable:
        case ArgKind::computed:
            if (is_pure_variable(slot.text)) {
                auto refs = find_variable_refs(slot.text);
                key = "var|" + normalize_keyword_name(refs[0].name);
            } else {
                key = "cmp|" + slot.text;  // composite value
            }
            break;
    }
    key += '|';
    key += arg_role_name(slot.role);

    auto [it, inserted] = arg_entities_.try_emplace(key);
    ArgumentNode& node = it->second;
    if (inserted) {
        node.display = slot.text;
        node.kind = slot.kind;
        node.role = slot.role;
        arg_order_.push_back(&node);
    }
    if (slot.kind == ArgKind::computed) node.kind = ArgKind::computed;
    node.resolved_values.insert(slot.resolved_values.begin(), slot.resolved_values.end());
    bool seen = false;
    for (const auto& o : node.occurrences)
        if (o.scope == slot.scope && o.loc.key() == slot.loc.key()) {
            seen = true;
            break;
        }
    if (!seen) node.occurrences.push_back(ArgumentNode::Occurrence{slot.loc, slot.scope});
}

const SuiteAst* Snapshot::find_file(const std::string& path) const {
    for (const auto& f : files)
        if (f->file.path() == path) return f.get();
    return nullptr;
}

const UserKeywordDef* Snapshot::find_keyword(const std::string& key) const {
    for (const auto& k : keywords)
        if (k->key() == key) return k.get();
    return nullptr;
}

namespace {

std::string regex_escape(char c) {
    static const std::string special = R"(\^$.|?*+()[]{})";
    if (special.find(c) != std::string::npos) return std::string("\\") + c;
    return std::string(1, c);
}

// Matcher for embedded-argument keyword names such as
//   User "${username}" logs in with password "${password}"
struct EmbeddedMatcher {
    // space/underscore runs in the literal parts match interchangeably
    static void append_literal(std::string& re, char c) {
        if (c == ' ' || c == '_') {
            if (re.size() >= 5 && re.compare(re.size() - 5, 5, "[ _]+") == 0) return;
            re += "[ _]+";
            return;
        }
        re += regex_escape(c);
    }

    std::regex pattern;
    std::vector<std::string> arg_names;

    static std::optional<EmbeddedMatcher> build(const std::string& name) {
        auto refs = find_variable_refs(name);
        bool any_scalar = false;
        for (const auto& r : refs) any_scalar |= r.sigil == '$';
        if (!any_scalar) return std::nullopt;

        EmbeddedMatcher m;
        std::string re;
        std::size_t pos = 0;
        for (const auto& r : refs) {
            if (r.sigil != '$') continue;
            for (std::size_t i = pos; i < r.begin; ++i) append_literal(re, name[i]);
            re += "(.*?)";
            // custom patterns like ${x:\d+} keep only the name part
            std::string arg = r.name;
            if (auto colon = arg.find(':'); colon != std::string::npos)
                arg = arg.substr(0, colon);
            m.arg_names.push_back(arg);
            pos = r.end;
        }
        for (std::size_t i = pos; i < name.size(); ++i) append_literal(re, name[i]);
        m.pattern = std::regex("^" + re + "$", std::regex::icase);
        return m;
    }

    std::optional<std::vector<std::string>> match(const std::string& call_name) const {
        std::smatch sm;
        if (!std::regex_match(call_name, sm, pattern)) return std::nullopt;
        std::vector<std::string> values;
        for (std::size_t i = 1; i < sm.size(); ++i) values.push_back(sm[i].str());
        return values;
    }
};

// Possible static values of one expression.
struct ValueInfo {
    std::set<std::string> values;
    bool computed = false;
    bool resolvable = true;
};

using Scope = std::map<std::string, ValueInfo>;  // normalized var name -> info

struct FileVariables {
    // normalized name -> (file path -> raw value text)
    std::map<std::string, std::map<std::string, std::string>> defs;

    const std::string* lookup(const std::string& norm_name, const std::string& prefer_file) const {
        auto it = defs.find(norm_name);
        if (it == defs.end()) return nullptr;
        auto f = it->second.find(prefer_file);
        if (f != it->second.end()) return &f->second;
        return &it->second.begin()->second;  // lexicographically first file
    }
};

struct KeywordIndex {
    // exact (non-embedded) defs: normalized name -> defs in file order
    std::map<std::string, std::vector<UserKeywordDef*>> exact;
    struct EmbeddedEntry {
        UserKeywordDef* def;
        EmbeddedMatcher matcher;
    };
    std::vector<EmbeddedEntry> embedded;  // in (file, definition) order
};

class TreeBuilder {
public:
    TreeBuilder(Snapshot& snap, const KeywordCatalog& catalog, const KeywordIndex& index,
                const FileVariables& vars)
        : snap_(snap), catalog_(catalog), index_(index), vars_(vars) {}

    void build_test(const SuiteAst& suite, const TestCaseAst& test) {
        auto tree = std::make_unique<CallTree>();
        tree_ = tree.get();
        tree->test_id = TestId{suite.file.path(), test.name};

        CallNode* root = tree->new_node();
        root->kind = NodeKind::root;
        root->name = test.name;
        root->depth = 0;
        root->loc = NodeLoc{suite.file.path(), "test", normalize_keyword_name(test.name),
                            "body",          {},     0,
                            test.line,       "test " + test.name};
        tree->root = root;

        // Fixtures. Suite setup precedes the per-test setup; teardowns mirror.
        const Setting* suite_setup = find_setting(suite, "suite setup");
        const Setting* suite_teardown = find_setting(suite, "suite teardown");
        const Setting* test_setup = find_setting(suite, "test setup");
        const Setting* test_teardown = find_setting(suite, "test teardown");

        current_scope_ = TreeScope::setup;
        if (suite_setup)
            add_fixture_root(suite, *suite_setup, "setup", tree->setup_roots);
        if (test.setup) {
            add_test_fixture_root(suite, test, *test.setup, "setup", tree->setup_roots);
        } else if (test_setup) {
            add_fixture_root(suite, *test_setup, "setup", tree->setup_roots);
        }
        current_scope_ = TreeScope::teardown;
        if (test.teardown) {
            add_test_fixture_root(suite, test, *test.teardown, "teardown", tree->teardown_roots);
        } else if (test_teardown) {
            add_fixture_root(suite, *test_teardown, "teardown", tree->teardown_roots);
        }
        if (suite_teardown)
            add_fixture_root(suite, *suite_teardown, "teardown", tree->teardown_roots);

        // Body.
        current_scope_ = TreeScope::body;
        Scope scope;
        NodeLoc base{suite.file.path(), "test", normalize_keyword_name(test.name), "body", {}, 0,
                     test.line,         ""};
        expand_body(test.body, root, suite.file.path(), base, scope, {});

        snap_.tests.push_back(std::move(tree));
    }

private:
    const Setting* find_setting(const SuiteAst& suite, const std::string& norm_name) {
        const Setting* found = nullptr;
        for (const auto& s : suite.settings) {
            if (normalize_keyword_name(s.name) == normalize_keyword_name(norm_name) &&
                !s.values.empty())
                found = &s;  // last definition wins
        }
        return found;
    }

    void add_fixture_root(const SuiteAst& suite, const Setting& setting, const char* slot,
                          std::vector<CallNode*>& roots) {
        CallStatement call;
        call.callee = setting.values[0];
        for (std::size_t i = 1; i < setting.values.size(); ++i) call.args.push_back(setting.values[i]);
        call.line = setting.line;
        call.span = setting.span;
        std::string lower = to_lower(call.callee.text);
        if (lower == "none" || lower == "no operation") return;

        NodeLoc base{suite.file.path(),
                     "settings",
                     normalize_keyword_name(setting.name),
                     slot,
                     {},
                     0,
                     setting.line,
                     ""};
        Scope scope;
        std::vector<CallStatement> stmts{call};
        std::vector<CallNode*> produced =
            expand_body(stmts, nullptr, suite.file.path(), base, scope, {});
        for (CallNode* n : produced) {
            n->depth = 1;
            fix_depths(n);
            roots.push_back(n);
        }
    }

    void add_test_fixture_root(const SuiteAst& suite, const TestCaseAst& test,
                               const CallStatement& call, const char* slot,
                               std::vector<CallNode*>& roots) {
        NodeLoc base{suite.file.path(), "test", normalize_keyword_name(test.name),
                     slot,              {},     0,
                     call.line,         ""};
        Scope scope;
        std::vector<CallStatement> stmts{call};
        std::vector<CallNode*> produced =
            expand_body(stmts, nullptr, suite.file.path(), base, scope, {});
        for (CallNode* n : produced) {
            n->depth = 1;
            fix_depths(n);
            roots.push_back(n);
        }
    }

    void fix_depths(CallNode* n) {
        for (CallNode* c : n->children) {
            c->depth = n->depth + 1;
            fix_depths(c);
        }
    }

    // Expands a statement list. When parent is non-null the produced nodes are
    // appended to its children; the produced top-level nodes are returned.
    std::vector<CallNode*> expand_body(const std::vector<CallStatement>& stmts, CallNode* parent,
                                       const std::string& file, const NodeLoc& base, Scope& scope,
                                       std::vector<std::string> stack,
                                       const Scope* bindings = nullptr) {
        std::vector<CallNode*> produced;
        for (std::size_t i = 0; i < stmts.size(); ++i) {
            NodeLoc loc = base;
            loc.stmt_path.push_back(static_cast<int>(i));
            CallNode* node =
                expand_statement(stmts[i], parent, file, loc, scope, stack, bindings);
            if (node) produced.push_back(node);
        }
        return produced;
    }

    CallNode* expand_statement(const CallStatement& stmt, CallNode* parent,
                               const std::string& file, const NodeLoc& loc, Scope& scope,
                               const std::vector<std::string>& stack, const Scope* bindings) {
        if (stmt.kind == CallStatement::Kind::conditional) {
            CallNode* first_marker = nullptr;
            for (std::size_t b = 0; b < stmt.branches.size(); ++b) {
                CallNode* marker = tree_->new_node();
                marker->scope = current_scope_;
                marker->kind = NodeKind::marker;
                marker->conditional_marker = true;
                marker->name = b == 0 ? "IF" : (stmt.branches[b].header.empty() ? "ELSE" : "ELSE IF");
                marker->category = Category::controlflow;
                marker->loc = loc;
                marker->loc.stmt_path.push_back(static_cast<int>(b));
                marker->loc.line = stmt.branches[b].line;
                marker->loc.label = marker->name + " branch";
                attach(marker, parent);
                Scope branch_scope = scope;
                expand_body(stmt.branches[b].body, marker, file, marker->loc, branch_scope, stack,
                            bindings);
                merge_assignments(scope, branch_scope);
                if (!first_marker) first_marker = marker;
            }
            return first_marker;
        }
        if (stmt.kind == CallStatement::Kind::loop) {
            CallNode* marker = tree_->new_node();
            marker->scope = current_scope_;
            marker->kind = NodeKind::marker;
            marker->conditional_marker = false;
            marker->name = "FOR";
            marker->category = Category::controlflow;
            marker->loc = loc;
            marker->loc.line = stmt.line;
            marker->loc.label = "FOR loop";
            attach(marker, parent);
            NodeLoc body_base = marker->loc;
            body_base.stmt_path.push_back(0);
            Scope loop_scope = scope;
            // loop variables are not statically resolvable
            for (const Cell& h : stmt.loop_header) {
                if (is_pure_variable(h.text)) {
                    auto refs = find_variable_refs(h.text);
                    loop_scope[normalize_keyword_name(refs[0].name)] =
                        ValueInfo{{}, false, false};
                } else {
                    break;  // header cells after IN are values
                }
            }
            expand_body(stmt.loop_body, marker, file, body_base, loop_scope, stack, bindings);
            merge_assignments(scope, loop_scope);
            return marker;
        }

        CallNode* node = tree_->new_node();
        node->scope = current_scope_;
        node->name = stmt.callee.text;
        node->loc = loc;
        node->loc.line = stmt.line;
        node->loc.label = "call " + stmt.callee.text;
        attach(node, parent);
        resolve_call(node, stmt, file, scope, stack, bindings);

        // Assignments made by this statement are computed from here on.
        for (const Cell& a : stmt.assigned)
            scope[normalize_keyword_name(a.text)] = ValueInfo{{}, true, false};
        return node;
    }

    void attach(CallNode* node, CallNode* parent) {
        if (!parent) return;
        node->depth = parent->depth + 1;
        parent->children.push_back(node);
    }

    void resolve_call(CallNode* node, const CallStatement& stmt, const std::string& file,
                      Scope& scope, const std::vector<std::string>& stack,
                      const Scope* bindings) {
        const std::string raw_name = stmt.callee.text;
        const std::string stripped = strip_bdd_prefix(raw_name);

        // 1. exact user-keyword match, local file first
        UserKeywordDef* def = lookup_exact(raw_name, file);
        std::string matched_name = raw_name;
        if (!def) {
            def = lookup_exact(stripped, file);
            matched_name = stripped;
        }
        std::vector<std::string> embedded_values;
        std::vector<std::string> embedded_names;
        if (!def) {
            // 2. library keyword
            const CatalogEntry* entry = catalog_.find(raw_name);
            if (!entry) entry = catalog_.find(stripped);
            if (entry) {
                node->kind = NodeKind::library_call;
                node->resolved_name = normalize_keyword_name(entry->name);
                node->category = entry->category;
                node->flags = entry->flags;
                fill_args(node, stmt, entry, scope, bindings, file);
                return;
            }
            // 3. embedded-argument user keyword
            for (const std::string* name : {&raw_name, &stripped}) {
                for (const auto& e : index_.embedded) {
                    if (e.def->file != file) continue;
                    if (auto vals = e.matcher.match(*name)) {
                        def = e.def;
                        embedded_values = *vals;
                        embedded_names = e.matcher.arg_names;
                        break;
                    }
                }
                if (def) break;
                for (const auto& e : index_.embedded) {
                    if (e.def->file == file) continue;
                    if (auto vals = e.matcher.match(*name)) {
                        def = e.def;
                        embedded_values = *vals;
                        embedded_names = e.matcher.arg_names;
                        break;
                    }
                }
                if (def) break;
            }
        }

        if (!def) {
            node->kind = NodeKind::unresolved;
            fill_args(node, stmt, nullptr, scope, bindings, file);
            return;
        }

        // Cycle: cut the back-edge, keep the node as an unresolved leaf.
        if (std::find(stack.begin(), stack.end(), def->key()) != stack.end()) {
            node->kind = NodeKind::unresolved;
            node->resolved_name = def->normalized_name;
            fill_args(node, stmt, nullptr, scope, bindings, file);
            snap_.diagnostics.push_back(
                Diagnostic{file, stmt.line, Severity::warning,
                           "recursive keyword call cycle cut at '" + raw_name + "'"});
            return;
        }

        node->kind = NodeKind::user_call;
        node->def = def;
        node->def_key = def->key();
        node->resolved_name = def->normalized_name;
        fill_args(node, stmt, nullptr, scope, bindings, file);

        // Embedded values become hardcoded/variable argument slots on the call.
        Scope child_bindings;
        for (std::size_t k = 0; k < embedded_values.size(); ++k) {
            ArgSlot slot;
            slot.text = embedded_values[k];
            slot.loc = node->loc;
            slot.loc.arg_index = -static_cast<int>(k + 1);  // embedded ordinal
            slot.scope = current_scope_;
            ValueInfo info = evaluate(embedded_values[k], scope, bindings, file, 0);
            classify_slot(slot, info);
            node->args.push_back(slot);
            tree_->register_argument(slot);
            child_bindings[normalize_keyword_name(embedded_names[k])] = info;
        }
        // Positional parameters.
        for (std::size_t i = 0; i < def->declared_arguments.size(); ++i) {
            std::string key = normalize_keyword_name(def->declared_arguments[i]);
            if (i < stmt.args.size()) {
                child_bindings[key] = evaluate(stmt.args[i].text, scope, bindings, file, 0);
            } else if (!child_bindings.count(key)) {
                child_bindings[key] = ValueInfo{{}, false, false};
            }
        }

        std::vector<std::string> child_stack = stack;
        child_stack.push_back(def->key());
        NodeLoc body_base{def->file, "keyword", def->normalized_name, "body", {}, 0,
                          def->ast->line, ""};
        Scope child_scope;
        expand_body(def->ast->body, node, def->file, body_base, child_scope, child_stack,
                    &child_bindings);
    }

    UserKeywordDef* lookup_exact(const std::string& name, const std::string& local_file) {
        auto it = index_.exact.find(normalize_keyword_name(name));
        if (it == index_.exact.end() || it->second.empty()) return nullptr;
        for (UserKeywordDef* d : it->second)
            if (d->file == local_file) return d;
        return it->second.front();  // files are pre-sorted by path
    }

    void fill_args(CallNode* node, const CallStatement& stmt, const CatalogEntry* entry,
                   Scope& scope, const Scope* bindings, const std::string& file) {
        for (std::size_t i = 0; i < stmt.args.size(); ++i) {
            ArgSlot slot;
            slot.text = stmt.args[i].text;
            slot.loc = node->loc;
            slot.loc.arg_index = static_cast<int>(i) + 1;
            slot.loc.line = stmt.args[i].line;
            slot.scope = current_scope_;
            if (entry) {
                int ordinal = static_cast<int>(i) + 1;
                if (entry->expected_arg_index && *entry->expected_arg_index == ordinal)
                    slot.role = ArgRole::expected;
                else if (entry->locator_arg_indices.count(ordinal))
                    slot.role = ArgRole::locator;
                else if (entry->config_arg_indices.count(ordinal))
                    slot.role = ArgRole::configuration;
            }
            ValueInfo info = evaluate(slot.text, scope, bindings, file, 0);
            classify_slot(slot, info);
            node->args.push_back(slot);
            if (node->kind != NodeKind::unresolved) tree_->register_argument(slot);
        }
    }

    static void classify_slot(ArgSlot& slot, const ValueInfo& info) {
        auto refs = find_variable_refs(slot.text);
        if (refs.empty()) {
            slot.kind = ArgKind::hardcoded;
            slot.resolved_values = {slot.text};
            return;
        }
        slot.kind = info.computed ? ArgKind::computed : ArgKind::variable;
        if (!info.computed && info.resolvable) slot.resolved_values = info.values;
    }

    ValueInfo evaluate(const std::string& text, const Scope& scope, const Scope* bindings,
                       const std::string& file, int depth) {
        auto refs = find_variable_refs(text);
        if (refs.empty()) return ValueInfo{{text}, false, true};
        if (depth > kMaxVariableDepth) return ValueInfo{{}, false, false};

        std::set<std::string> combos{""};
        bool computed = false;
        bool resolvable = true;
        std::size_t pos = 0;
        auto append_literal = [&combos](const std::string& lit) {
            if (lit.empty()) return;
            std::set<std::string> next;
            for (const auto& c : combos) next.insert(c + lit);
            combos = std::move(next);
        };
        for (const auto& r : refs) {
            append_literal(text.substr(pos, r.begin - pos));
            pos = r.end;

            ValueInfo sub = lookup_var(r.name, scope, bindings, file, depth);
            computed |= sub.computed;
            if (!sub.resolvable || sub.values.empty()) {
                resolvable = false;
                continue;
            }
            std::set<std::string> next;
            for (const auto& c : combos)
                for (const auto& v : sub.values) {
                    next.insert(c + v);
                    if (next.size() > kMaxValueCombinations) {
                        resolvable = false;
                        break;
                    }
                }
            if (!resolvable) continue;
            combos = std::move(next);
        }
        append_literal(text.substr(pos));
        if (!resolvable || computed) return ValueInfo{{}, computed, false};
        return ValueInfo{combos, false, true};
    }

    ValueInfo lookup_var(const std::string& name, const Scope& scope, const Scope* bindings,
                         const std::string& file, int depth) {
        std::string norm = normalize_keyword_name(name);
        if (auto it = scope.find(norm); it != scope.end()) return it->second;
        if (bindings) {
            if (auto it = bindings->find(norm); it != bindings->end()) return it->second;
        }
        if (const std::string* raw = vars_.lookup(norm, file)) {
            Scope empty;
            return evaluate(*raw, empty, nullptr, file, depth + 1);
        }
        return ValueInfo{{}, false, false};
    }

    static void merge_assignments(Scope& outer, const Scope& inner) {
        for (const auto& [k, v] : inner) outer[k] = v;
    }

    Snapshot& snap_;
    const KeywordCatalog& catalog_;
    const KeywordIndex& index_;
    const FileVariables& vars_;
    CallTree* tree_ = nullptr;
    TreeScope current_scope_ = TreeScope::body;
};

}  // namespace

Snapshot build_snapshot(std::vector<std::shared_ptr<SuiteAst>> asts,
                        const KeywordCatalog& catalog, std::string version_id) {
    Snapshot snap;
    snap.version_id = std::move(version_id);
    std::sort(asts.begin(), asts.end(), [](const auto& a, const auto& b) {
        return a->file.path() < b->file.path();
    });
    snap.files = std::move(asts);

    for (const auto& f : snap.files)
        for (const auto& d : f->diagnostics) snap.diagnostics.push_back(d);

    // Duplicate test ids are fatal.
    std::set<std::string> test_keys;
    for (const auto& f : snap.files) {
        for (const auto& t : f->test_cases) {
            TestId id{f->file.path(), t.name};
            if (!test_keys.insert(id.key()).second)
                throw DuplicateTestIdError("duplicate test id: " + f->file.path() +
                                           "::" + t.name);
        }
    }

    // Keyword definitions and their lookup index.
    KeywordIndex index;
    for (const auto& f : snap.files) {
        for (const auto& k : f->user_keywords) {
            auto def = std::make_unique<UserKeywordDef>();
            def->file = f->file.path();
            def->name = k.name;
            def->normalized_name = normalize_keyword_name(k.name);
            def->declared_arguments = k.declared_arguments;
            def->ast = &k;
            if (auto matcher = EmbeddedMatcher::build(k.name)) {
                def->embedded_arguments = true;
                index.embedded.push_back(KeywordIndex::EmbeddedEntry{def.get(), *matcher});
            } else {
                index.exact[def->normalized_name].push_back(def.get());
            }
            snap.keywords.push_back(std::move(def));
        }
    }

    FileVariables vars;
    for (const auto& f : snap.files) {
        for (const auto& v : f->variables) {
            std::string value;
            for (std::size_t i = 0; i < v.values.size(); ++i) {
                if (i) value += ' ';
                value += v.values[i].text;
            }
            std::string norm = normalize_keyword_name(v.name);
            vars.defs[norm].emplace(f->file.path(), value);
        }
    }

    TreeBuilder builder(snap, catalog, index, vars);
    for (const auto& f : snap.files)
        for (const auto& t : f->test_cases) builder.build_test(*f, t);
    return snap;
}

std::set<std::string> resolve_argument_values(const CallTree&, const ArgumentNode& arg) {
    if (arg.kind == ArgKind::computed) return {};
    return arg.resolved_values;
}

}  // namespace suitlint
