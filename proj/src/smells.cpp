#include "suitlint/smells.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "suitlint/locator.hpp"
#include "suitlint/parser.hpp"
#include "suitlint/util.hpp"

namespace suitlint {

namespace {

struct SmellInfo {
    SmellId id;
    const char* code;
    const char* name;
};

constexpr SmellInfo kSmells[] = {
    {SmellId::AoC, "AoC", "Army of Clones"},
    {SmellId::CA, "CA", "Conditional Assertions"},
    {SmellId::HE, "HE", "Hardcoded Environment"},
    {SmellId::HTD, "HTD", "Hidden Test Data"},
    {SmellId::LoE, "LoE", "Lack of Encapsulation"},
    {SmellId::LTS, "LTS", "Long Test Steps"},
    {SmellId::MA, "MA", "Missing Assertion"},
    {SmellId::MM, "MM", "Middle Man"},
    {SmellId::N, "N", "Narcissistic"},
    {SmellId::NL, "NL", "Noisy Logging"},
    {SmellId::OC, "OC", "Over-Checking"},
    {SmellId::OT, "OT", "Obscure Test"},
    {SmellId::OtF, "OtF", "On the Fly"},
    {SmellId::SC, "SC", "Sneaky Checking"},
    {SmellId::SL, "SL", "Sensitive Locators"},
    {SmellId::SS, "SS", "Stinky Synchronization"},
};

void walk(const CallNode* node, const std::function<void(const CallNode*)>& fn) {
    fn(node);
    for (const CallNode* c : node->children) walk(c, fn);
}

void walk_body(const CallTree& tree, const std::function<void(const CallNode*)>& fn) {
    if (!tree.root) return;
    for (const CallNode* c : tree.root->children) walk(c, fn);
}

void walk_setup(const CallTree& tree, const std::function<void(const CallNode*)>& fn) {
    for (const CallNode* r : tree.setup_roots) walk(r, fn);
}

NodeLoc keyword_def_loc(const UserKeywordDef& def) {
    return NodeLoc{def.file,
                   "keyword",
                   def.normalized_name,
                   "body",
                   {},
                   0,
                   def.ast ? def.ast->line : 0,
                   "keyword " + def.name};
}

void add_node(SmellFinding& f, const NodeLoc& loc) {
    f.nodes.push_back(loc);
    f.occurrence_keys.insert(loc.key());
}

void add_entity(SmellFinding& f, const ArgumentNode& arg, TreeScope* scope_filter) {
    f.nodes.push_back(arg.canonical_loc());
    for (const auto& o : arg.occurrences) {
        if (scope_filter && o.scope != *scope_filter) continue;
        f.occurrence_keys.insert(o.loc.key());
    }
}

// Argument entities visible to body metrics (at least one body occurrence).
std::vector<const ArgumentNode*> body_arguments(const CallTree& tree) {
    std::vector<const ArgumentNode*> out;
    for (const ArgumentNode* a : tree.argument_nodes())
        if (a->in_scope(TreeScope::body)) out.push_back(a);
    return out;
}

}  // namespace

const char* smell_code(SmellId id) { return kSmells[static_cast<int>(id)].code; }
const char* smell_name(SmellId id) { return kSmells[static_cast<int>(id)].name; }

std::vector<SmellId> all_smells() {
    std::vector<SmellId> out;
    for (const auto& s : kSmells) out.push_back(s.id);
    return out;
}

SmellId smell_from_code(const std::string& code) {
    for (const auto& s : kSmells)
        if (iequals(code, s.code)) return s.id;
    throw ConfigError("unknown smell id: " + code);
}

const std::map<std::string, std::vector<std::string>>& DetectorConfig::pronoun_lexicons() {
    static const std::map<std::string, std::vector<std::string>> lexicons = {
        {"en", {"i"}},
        {"fr", {"je", "j'"}},
    };
    return lexicons;
}

std::vector<std::string> DetectorConfig::enabled_pronouns() const {
    std::vector<std::string> out;
    for (const std::string& lang : languages) {
        auto it = pronoun_lexicons().find(to_lower(lang));
        if (it == pronoun_lexicons().end())
            throw ConfigError("no pronoun lexicon for language: " + lang);
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

namespace treeview {

std::vector<const CallNode*> body_library_calls(const CallTree& tree) {
    std::vector<const CallNode*> out;
    walk_body(tree, [&](const CallNode* n) {
        if (n->is_library()) out.push_back(n);
    });
    return out;
}

std::vector<const CallNode*> setup_library_calls(const CallTree& tree) {
    std::vector<const CallNode*> out;
    walk_setup(tree, [&](const CallNode* n) {
        if (n->is_library()) out.push_back(n);
    });
    return out;
}

std::vector<const CallNode*> steps(const CallTree& tree) {
    std::vector<const CallNode*> out;
    if (!tree.root) return out;
    for (const CallNode* c : tree.root->children)
        if (c->is_user() || c->is_library()) out.push_back(c);
    return out;
}

std::vector<const CallNode*> unique_user_keywords(const CallTree& tree) {
    std::vector<const CallNode*> out;
    std::set<std::string> seen;
    walk_body(tree, [&](const CallNode* n) {
        if (n->is_user() && seen.insert(n->def_key).second) out.push_back(n);
    });
    return out;
}

int action_leaf_count(const CallNode* node) {
    int count = 0;
    walk(node, [&](const CallNode* n) {
        if (n->is_library() && n->flags.count(EntryFlag::action)) ++count;
    });
    return count;
}

bool is_delegate(const CallNode* instance) {
    const CallNode* only = nullptr;
    for (const CallNode* c : instance->children) {
        if (c->is_library() && c->has_category(Category::logging)) continue;
        if (only) return false;
        only = c;
    }
    return only && only->is_user() && only->def_key != instance->def_key;
}

bool is_assertion_wrapper(const CallNode* instance) {
    const CallNode* only = nullptr;
    for (const CallNode* c : instance->children) {
        if (c->is_library() && c->has_category(Category::logging)) continue;
        if (only) return false;
        only = c;
    }
    return only && only->is_library() && only->has_category(Category::assertion);
}

bool name_has_leading_pronoun(const std::string& name,
                              const std::vector<std::string>& pronouns) {
    std::string stripped = strip_bdd_prefix(name);
    std::size_t ws = stripped.find_first_of(" \t");
    std::string first = to_lower(ws == std::string::npos ? stripped : stripped.substr(0, ws));
    if (first.empty()) return false;
    for (const std::string& p : pronouns) {
        if (first == p) return true;
        // apostrophe entries are prefixes: "j'" matches "j'ouvre"
        if (!p.empty() && p.back() == '\'' && first.rfind(p, 0) == 0) return true;
    }
    return false;
}

}  // namespace treeview

SmellFinding detect_AoC(const CallTree& tree, const CloneIndex& clones,
                        const DetectorConfig& config) {
    SmellFinding f;
    f.smell = SmellId::AoC;
    auto keywords = treeview::unique_user_keywords(tree);
    f.denominator = static_cast<long long>(keywords.size());
    for (const CallNode* k : keywords) {
        if (clones.is_clone(k->def_key, config.clone_type)) {
            ++f.count;
            add_node(f, keyword_def_loc(*k->def));
        }
    }
    return f;
}

SmellFinding detect_CA(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::CA;
    std::function<void(const CallNode*, const CallNode*)> visit =
        [&](const CallNode* node, const CallNode* parent) {
            if (node->is_library() && node->has_category(Category::assertion)) {
                ++f.denominator;
                if (parent && parent->is_marker() && parent->conditional_marker) {
                    int non_logging = 0;
                    for (const CallNode* sib : parent->children)
                        if (!(sib->is_library() && sib->has_category(Category::logging)))
                            ++non_logging;
                    if (non_logging == 1) {
                        ++f.count;
                        add_node(f, node->loc);
                    }
                }
            }
            for (const CallNode* c : node->children) visit(c, node);
        };
    if (tree.root)
        for (const CallNode* c : tree.root->children) visit(c, tree.root);
    return f;
}

SmellFinding detect_HE(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::HE;
    // Configuration arguments live mostly in fixtures, so this metric scans
    // the whole tree rather than the body subtree alone.
    for (const ArgumentNode* a : tree.argument_nodes()) {
        if (a->role != ArgRole::configuration) continue;
        ++f.denominator;
        if (a->kind == ArgKind::hardcoded) {
            ++f.count;
            add_entity(f, *a, nullptr);
        }
    }
    return f;
}

SmellFinding detect_HTD(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::HTD;
    for (const CallNode* n : treeview::setup_library_calls(tree)) {
        ++f.denominator;
        if (n->has_category(Category::getter)) {
            ++f.count;
            add_node(f, n->loc);
        }
    }
    return f;
}

SmellFinding detect_LoE(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::LoE;
    for (const CallNode* s : treeview::steps(tree)) {
        ++f.denominator;
        if (s->is_library()) {
            ++f.count;
            add_node(f, s->loc);
        }
    }
    return f;
}

SmellFinding detect_LTS(const CallTree& tree, const DetectorConfig& config) {
    SmellFinding f;
    f.smell = SmellId::LTS;
    for (const CallNode* s : treeview::steps(tree)) {
        ++f.denominator;
        if (treeview::action_leaf_count(s) >= config.long_step_threshold) {
            ++f.count;
            add_node(f, s->loc);
        }
    }
    return f;
}

SmellFinding detect_MA(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::MA;
    f.denominator = 1;
    bool has_assertion = false;
    for (const CallNode* n : treeview::body_library_calls(tree))
        if (n->has_category(Category::assertion)) has_assertion = true;
    f.count = has_assertion ? 0 : 1;
    return f;
}

SmellFinding detect_MM(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::MM;
    auto keywords = treeview::unique_user_keywords(tree);
    f.denominator = static_cast<long long>(keywords.size());
    for (const CallNode* k : keywords) {
        if (treeview::is_delegate(k)) {
            ++f.count;
            add_node(f, keyword_def_loc(*k->def));
        }
    }
    return f;
}

SmellFinding detect_N(const CallTree& tree, const DetectorConfig& config) {
    SmellFinding f;
    f.smell = SmellId::N;
    auto pronouns = config.enabled_pronouns();
    for (const CallNode* s : treeview::steps(tree)) {
        ++f.denominator;
        if (treeview::name_has_leading_pronoun(s->name, pronouns)) {
            ++f.count;
            add_node(f, s->loc);
        }
    }
    return f;
}

SmellFinding detect_NL(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::NL;
    for (const CallNode* n : treeview::setup_library_calls(tree)) {
        ++f.denominator;
        if (n->has_category(Category::logging)) {
            ++f.count;
            add_node(f, n->loc);
        }
    }
    return f;
}

SmellFinding detect_OC(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::OC;
    for (const CallNode* n : treeview::body_library_calls(tree)) {
        ++f.denominator;
        if (n->has_category(Category::assertion)) {
            ++f.count;
            add_node(f, n->loc);
        }
    }
    return f;
}

SmellFinding detect_OT(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::OT;
    TreeScope body = TreeScope::body;
    for (const ArgumentNode* a : body_arguments(tree)) {
        ++f.denominator;
        if (a->kind == ArgKind::hardcoded) {
            ++f.count;
            add_entity(f, *a, &body);
        }
    }
    return f;
}

SmellFinding detect_OtF(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::OtF;
    TreeScope body = TreeScope::body;
    for (const ArgumentNode* a : body_arguments(tree)) {
        if (a->role != ArgRole::expected) continue;
        ++f.denominator;
        if (a->kind == ArgKind::computed) {
            ++f.count;
            add_entity(f, *a, &body);
        }
    }
    return f;
}

SmellFinding detect_SC(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::SC;
    auto keywords = treeview::unique_user_keywords(tree);
    f.denominator = static_cast<long long>(keywords.size());
    for (const CallNode* k : keywords) {
        if (treeview::is_assertion_wrapper(k)) {
            ++f.count;
            add_node(f, keyword_def_loc(*k->def));
        }
    }
    return f;
}

SmellFinding detect_SL(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::SL;
    TreeScope body = TreeScope::body;
    for (const ArgumentNode* a : body_arguments(tree)) {
        if (a->role != ArgRole::locator) continue;
        if (a->resolved_values.empty()) continue;
        ++f.denominator;
        bool all_complex = true;
        for (const std::string& v : a->resolved_values)
            if (locator_element_count(v) <= 1) all_complex = false;
        if (all_complex) {
            ++f.count;
            add_entity(f, *a, &body);
        }
    }
    return f;
}

SmellFinding detect_SS(const CallTree& tree) {
    SmellFinding f;
    f.smell = SmellId::SS;
    for (const CallNode* n : treeview::body_library_calls(tree)) {
        if (!n->has_category(Category::sync)) continue;
        ++f.denominator;
        if (n->flags.count(EntryFlag::sleep)) {
            ++f.count;
            add_node(f, n->loc);
        }
    }
    return f;
}

std::vector<SmellFinding> detect_all(const CallTree& tree, const CloneIndex& clones,
                                     const DetectorConfig& config) {
    std::vector<SmellFinding> out;
    out.reserve(kSmellCount);
    out.push_back(detect_AoC(tree, clones, config));
    out.push_back(detect_CA(tree));
    out.push_back(detect_HE(tree));
    out.push_back(detect_HTD(tree));
    out.push_back(detect_LoE(tree));
    out.push_back(detect_LTS(tree, config));
    out.push_back(detect_MA(tree));
    out.push_back(detect_MM(tree));
    out.push_back(detect_N(tree, config));
    out.push_back(detect_NL(tree));
    out.push_back(detect_OC(tree));
    out.push_back(detect_OT(tree));
    out.push_back(detect_OtF(tree));
    out.push_back(detect_SC(tree));
    out.push_back(detect_SL(tree));
    out.push_back(detect_SS(tree));
    return out;
}

}  // namespace suitlint
