#include "suitlint/refactoring.hpp"

#include <algorithm>
#include <functional>

#include "suitlint/locator.hpp"
#include "suitlint/util.hpp"

namespace suitlint {

const SmellFinding* VersionFindings::find(const std::string& test_key, SmellId smell) const {
    auto it = by_test.find(test_key);
    if (it == by_test.end()) return nullptr;
    for (const SmellFinding& f : it->second)
        if (f.smell == smell) return &f;
    return nullptr;
}

namespace {

struct NodeIndex {
    // test key -> location key -> node
    std::map<std::string, std::map<std::string, const CallNode*>> by_test;
    // test key -> canonical location key -> argument entity
    std::map<std::string, std::map<std::string, const ArgumentNode*>> args_by_test;

    static NodeIndex build(const Snapshot& snap) {
        NodeIndex index;
        for (const auto& tree : snap.tests) {
            auto& nodes = index.by_test[tree->test_id.key()];
            std::function<void(const CallNode*)> visit = [&](const CallNode* n) {
                nodes.try_emplace(n->loc.key(), n);
                for (const CallNode* c : n->children) visit(c);
            };
            if (tree->root) visit(tree->root);
            for (const CallNode* r : tree->setup_roots) visit(r);
            for (const CallNode* r : tree->teardown_roots) visit(r);

            auto& args = index.args_by_test[tree->test_id.key()];
            for (const ArgumentNode* a : tree->argument_nodes())
                args.try_emplace(a->canonical_loc().key(), a);
        }
        return index;
    }

    const CallNode* node(const std::string& test, const std::string& loc_key) const {
        auto t = by_test.find(test);
        if (t == by_test.end()) return nullptr;
        auto n = t->second.find(loc_key);
        return n == t->second.end() ? nullptr : n->second;
    }
};

bool same_owner(const NodeLoc& a, const NodeLoc& b) {
    return a.file == b.file && a.owner_kind == b.owner_kind && a.owner == b.owner &&
           a.slot == b.slot;
}

// Location of the owning statement: argument ordinals stripped.
std::string stmt_key(NodeLoc loc) {
    loc.arg_index = 0;
    return loc.key();
}

bool path_is_prefix(const NodeLoc& block, const NodeLoc& node) {
    if (!same_owner(block, node)) return false;
    if (block.stmt_path.size() > node.stmt_path.size()) return false;
    return std::equal(block.stmt_path.begin(), block.stmt_path.end(), node.stmt_path.begin());
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

class Matcher {
public:
    Matcher(const Snapshot& v1, const Snapshot& v2, const VersionFindings& f1,
            const VersionFindings& f2, const std::vector<FineGrainedChange>& changes,
            const DetectorConfig& config)
        : v1_(v1),
          v2_(v2),
          f1_(f1),
          f2_(f2),
          changes_(changes),
          config_(config),
          index1_(NodeIndex::build(v1)),
          index2_(NodeIndex::build(v2)) {}

    std::vector<RefactoringAction> run() {
        for (const FineGrainedChange& c : changes_) {
            match_definition_removals(c);
            match_statement_removals(c);
            match_replacements(c);
            match_argument_edits(c);
            match_variable_edits(c);
            match_conditional_unwrap(c);
        }
        match_assertion_introductions();
        match_long_step_reductions();

        std::vector<RefactoringAction> out;
        for (auto& [key, action] : actions_) {
            if (!action.tests.empty()) out.push_back(std::move(action));
        }
        std::sort(out.begin(), out.end(), [](const RefactoringAction& a,
                                             const RefactoringAction& b) {
            if (a.smell != b.smell) return a.smell < b.smell;
            return a.description < b.description;
        });
        return out;
    }

private:
    // Tests where the key occurs in the v1 symptomatic set of `smell`.
    std::set<std::string> symptomatic_tests(SmellId smell, const std::string& key) const {
        std::set<std::string> out;
        for (const auto& [test, findings] : f1_.by_test) {
            const SmellFinding* f = f1_.find(test, smell);
            if (f && f->occurrence_keys.count(key)) out.insert(test);
        }
        return out;
    }

    bool symptom_absent_v2(const std::string& test, SmellId smell,
                           const std::string& key) const {
        const SmellFinding* f = f2_.find(test, smell);
        if (!f) return true;  // test no longer analyzed; nothing left to show
        return f->occurrence_keys.count(key) == 0;
    }

    void emit(SmellId smell, const NodeLoc& node, const FineGrainedChange* change,
              const std::set<std::string>& tests, const std::string& description) {
        if (tests.empty()) return;
        std::string key = std::string(smell_code(smell)) + "|" + node.key() + "|" +
                          (change ? change_kind_name(change->kind) : "composite");
        auto [it, inserted] = actions_.try_emplace(key);
        RefactoringAction& a = it->second;
        if (inserted) {
            a.smell = smell;
            a.from_version = v1_.version_id;
            a.to_version = v2_.version_id;
            a.nodes = {node};
            a.change_kind = change ? change_kind_name(change->kind) : "composite";
            a.description = description;
        }
        a.tests.insert(tests.begin(), tests.end());
    }

    // AoC, SC: a symptomatic keyword definition is removed. Renames were
    // already folded into name-changed by the differ, so they cannot match.
    void match_definition_removals(const FineGrainedChange& c) {
        if (c.kind != ChangeKind::node_removed || c.level != ChangeLevel::definition) return;
        if (c.before.owner_kind != "keyword") return;
        std::string key = c.before.key();
        for (SmellId smell : {SmellId::AoC, SmellId::SC}) {
            std::set<std::string> tests;
            for (const std::string& t : symptomatic_tests(smell, key))
                if (symptom_absent_v2(t, smell, key)) tests.insert(t);
            emit(smell, c.before, &c, tests, c.description);
        }
    }

    // HTD, NL, OC, SS, LoE: a symptomatic call statement is deleted.
    // Definition-level removals do not cascade here, which is what keeps
    // parent deletion and whole-test deletion from counting.
    void match_statement_removals(const FineGrainedChange& c) {
        if (c.kind != ChangeKind::node_removed || c.level != ChangeLevel::statement) return;
        std::string key = c.before.key();
        for (SmellId smell : {SmellId::HTD, SmellId::NL, SmellId::OC, SmellId::SS, SmellId::LoE}) {
            std::set<std::string> tests;
            for (const std::string& t : symptomatic_tests(smell, key))
                if (symptom_absent_v2(t, smell, key)) tests.insert(t);
            emit(smell, c.before, &c, tests, c.description);
        }
    }

    // Callee replacements: LoE (library step -> user keyword), SS (sleep ->
    // other synchronization), N (step renamed away from a pronoun), MM
    // (delegate call retargeted to a non-delegate).
    void match_replacements(const FineGrainedChange& c) {
        if (c.kind != ChangeKind::name_changed || c.level != ChangeLevel::statement) return;
        std::string before_key = c.before.key();
        std::string after_key = c.after.key();

        {  // LoE
            std::set<std::string> tests;
            for (const std::string& t : symptomatic_tests(SmellId::LoE, before_key)) {
                const CallNode* after = index2_.node(t, after_key);
                if (after && after->is_user() && symptom_absent_v2(t, SmellId::LoE, after_key))
                    tests.insert(t);
            }
            emit(SmellId::LoE, c.before, &c, tests, c.description);
        }
        {  // SS
            std::set<std::string> tests;
            for (const std::string& t : symptomatic_tests(SmellId::SS, before_key)) {
                const CallNode* after = index2_.node(t, after_key);
                if (after && after->is_library() && after->has_category(Category::sync) &&
                    !after->flags.count(EntryFlag::sleep) &&
                    symptom_absent_v2(t, SmellId::SS, after_key))
                    tests.insert(t);
            }
            emit(SmellId::SS, c.before, &c, tests, c.description);
        }
        {  // N
            std::set<std::string> tests;
            auto pronouns = config_.enabled_pronouns();
            if (!treeview::name_has_leading_pronoun(c.after_text, pronouns)) {
                for (const std::string& t : symptomatic_tests(SmellId::N, before_key)) {
                    if (symptom_absent_v2(t, SmellId::N, after_key)) tests.insert(t);
                }
            }
            emit(SmellId::N, c.before, &c, tests, c.description);
        }
        {  // MM: the symptomatic node is the delegate definition.
            for (const auto& [t, findings] : f1_.by_test) {
                const CallNode* before = index1_.node(t, before_key);
                if (!before || !before->is_user() || !before->def) continue;
                NodeLoc def_loc = keyword_def_loc(*before->def);
                const SmellFinding* f = f1_.find(t, SmellId::MM);
                if (!f || !f->occurrence_keys.count(def_loc.key())) continue;
                const CallNode* after = index2_.node(t, after_key);
                if (!after) continue;
                bool non_delegate = after->is_library() ||
                                    (after->is_user() && !treeview::is_delegate(after));
                if (!non_delegate) continue;
                if (!symptom_absent_v2(t, SmellId::MM, def_loc.key())) continue;
                emit(SmellId::MM, def_loc, &c, {t}, c.description);
            }
        }
    }

    // HE, OT: a hardcoded argument becomes a variable. OtF: an expected
    // argument stops being computed during the test.
    void match_argument_edits(const FineGrainedChange& c) {
        if (c.level != ChangeLevel::argument) return;
        if (c.before.file.empty() || c.after.file.empty()) return;  // arity changes
        std::string before_key = c.before.key();
        std::string after_key = c.after.key();

        if (c.kind == ChangeKind::argument_changed && c.before_is_literal &&
            !c.after_is_literal) {
            for (SmellId smell : {SmellId::HE, SmellId::OT}) {
                std::set<std::string> tests;
                for (const std::string& t : symptomatic_tests(smell, before_key))
                    if (symptom_absent_v2(t, smell, after_key)) tests.insert(t);
                emit(smell, c.before, &c, tests, c.description);
            }
        }

        if (c.kind == ChangeKind::argument_changed || c.kind == ChangeKind::value_changed) {
            {  // OtF
                std::set<std::string> tests;
                for (const std::string& t : symptomatic_tests(SmellId::OtF, before_key)) {
                    const CallNode* after = index2_.node(t, stmt_key(c.after));
                    bool still_computed = false;
                    if (after && c.after.arg_index >= 1 &&
                        static_cast<std::size_t>(c.after.arg_index) <= after->args.size())
                        still_computed =
                            after->args[c.after.arg_index - 1].kind == ArgKind::computed;
                    if (!still_computed && symptom_absent_v2(t, SmellId::OtF, after_key))
                        tests.insert(t);
                }
                emit(SmellId::OtF, c.before, &c, tests, c.description);
            }
            if (c.kind == ChangeKind::value_changed) {  // SL, in-place locator edit
                std::set<std::string> tests;
                for (const std::string& t : symptomatic_tests(SmellId::SL, before_key)) {
                    const CallNode* after = index2_.node(t, stmt_key(c.after));
                    if (!after || c.after.arg_index < 1 ||
                        static_cast<std::size_t>(c.after.arg_index) > after->args.size())
                        continue;
                    const ArgSlot& slot = after->args[c.after.arg_index - 1];
                    if (slot.resolved_values.empty()) continue;
                    bool all_simple = true;
                    for (const std::string& v : slot.resolved_values)
                        if (locator_element_count(v) > 1) all_simple = false;
                    if (all_simple && symptom_absent_v2(t, SmellId::SL, after_key))
                        tests.insert(t);
                }
                emit(SmellId::SL, c.before, &c, tests, c.description);
            }
        }
    }

    // SL via the variables section: the definition feeding a symptomatic
    // locator argument is simplified. Only value edits count.
    void match_variable_edits(const FineGrainedChange& c) {
        if (c.kind != ChangeKind::value_changed || c.level != ChangeLevel::variable) return;
        std::string var_name = c.before.owner;

        for (const auto& [t, args] : index1_.args_by_test) {
            const SmellFinding* f = f1_.find(t, SmellId::SL);
            if (!f || f->count == 0) continue;
            for (const NodeLoc& node : f->nodes) {
                auto it = args.find(node.key());
                if (it == args.end()) continue;
                const ArgumentNode* arg = it->second;
                if (!is_pure_variable(arg->display)) continue;
                auto refs = find_variable_refs(arg->display);
                if (normalize_keyword_name(refs[0].name) != var_name) continue;
                if (!symptom_absent_v2(t, SmellId::SL, node.key())) continue;
                emit(SmellId::SL, node, &c, {t}, c.description);
            }
        }
    }

    // CA: the conditional wrapper disappears and the assertion survives in
    // its place. Removing an ancestor of the conditional does not count.
    void match_conditional_unwrap(const FineGrainedChange& c) {
        if (c.kind != ChangeKind::node_removed || c.level != ChangeLevel::statement) return;
        if (c.before_stmt.kind != "conditional") return;

        for (const auto& [t, findings] : f1_.by_test) {
            const SmellFinding* f = f1_.find(t, SmellId::CA);
            if (!f || f->count == 0) continue;
            for (const NodeLoc& node : f->nodes) {
                if (!path_is_prefix(c.before, node)) continue;
                // the assertion must reappear as a sibling-level statement
                for (const FineGrainedChange& added : changes_) {
                    if (added.kind != ChangeKind::node_added ||
                        added.level != ChangeLevel::statement)
                        continue;
                    if (!same_owner(added.after, c.before)) continue;
                    bool is_twin = false;
                    for (const std::string& nested : c.before_stmt.nested_norms)
                        if (nested == added.after_stmt.norm) is_twin = true;
                    if (!is_twin) continue;
                    if (!symptom_absent_v2(t, SmellId::CA, added.after.key())) continue;
                    emit(SmellId::CA, node, &c, {t},
                         "conditional removed around assertion: " + added.description);
                }
            }
        }
    }

    // MA: an assertion call is introduced into a test that had none.
    void match_assertion_introductions() {
        for (const auto& [t, findings] : f1_.by_test) {
            const SmellFinding* before = f1_.find(t, SmellId::MA);
            const SmellFinding* after = f2_.find(t, SmellId::MA);
            if (!before || before->count == 0) continue;
            if (!after || after->count != 0) continue;
            for (const FineGrainedChange& c : changes_) {
                if (c.kind != ChangeKind::node_added || c.level != ChangeLevel::statement)
                    continue;
                const CallNode* node = index2_.node(t, c.after.key());
                if (!node || !node->is_library() || !node->has_category(Category::assertion))
                    continue;
                if (node->scope != TreeScope::body) continue;
                const CallTree* tree = nullptr;
                for (const auto& candidate : v1_.tests)
                    if (candidate->test_id.key() == t) tree = candidate.get();
                if (!tree) continue;
                emit(SmellId::MA, tree->root->loc, &c, {t}, c.description);
                break;
            }
        }
    }

    // LTS: a symptomatic step drops below the threshold while the step call
    // itself is left untouched.
    void match_long_step_reductions() {
        for (const auto& [t, findings] : f1_.by_test) {
            const SmellFinding* before = f1_.find(t, SmellId::LTS);
            if (!before || before->count == 0) continue;
            for (const NodeLoc& step : before->nodes) {
                std::string key = step.key();
                // step statement must be unchanged
                bool touched = false;
                for (const FineGrainedChange& c : changes_) {
                    if (c.level == ChangeLevel::statement || c.level == ChangeLevel::argument) {
                        if ((!c.before.file.empty() && c.before.key() == key) ||
                            (!c.after.file.empty() && c.after.key() == key))
                            touched = true;
                    }
                }
                if (touched) continue;
                if (!index2_.node(t, key)) continue;  // step must survive
                if (!symptom_absent_v2(t, SmellId::LTS, key)) continue;

                // at least one change below the step explains the reduction
                const CallNode* v1_step = index1_.node(t, key);
                if (!v1_step) continue;
                std::set<std::string> subtree_owners;
                std::function<void(const CallNode*)> visit = [&](const CallNode* n) {
                    if (n->is_user() && n->def)
                        subtree_owners.insert(n->def->file + "|" + n->def->normalized_name);
                    for (const CallNode* ch : n->children) visit(ch);
                };
                visit(v1_step);
                const FineGrainedChange* cause = nullptr;
                for (const FineGrainedChange& c : changes_) {
                    const NodeLoc& loc = c.before.file.empty() ? c.after : c.before;
                    if (loc.owner_kind != "keyword") continue;
                    if (subtree_owners.count(loc.file + "|" + loc.owner)) {
                        cause = &c;
                        break;
                    }
                }
                if (!cause) continue;
                emit(SmellId::LTS, step, cause, {t},
                     "step shortened below threshold: " + cause->description);
            }
        }
    }

    const Snapshot& v1_;
    const Snapshot& v2_;
    const VersionFindings& f1_;
    const VersionFindings& f2_;
    const std::vector<FineGrainedChange>& changes_;
    const DetectorConfig& config_;
    NodeIndex index1_;
    NodeIndex index2_;
    std::map<std::string, RefactoringAction> actions_;
};

}  // namespace

std::vector<RefactoringAction> match_refactorings(const Snapshot& v1, const Snapshot& v2,
                                                  const VersionFindings& f1,
                                                  const VersionFindings& f2,
                                                  const std::vector<FineGrainedChange>& changes,
                                                  const DetectorConfig& config) {
    Matcher matcher(v1, v2, f1, f2, changes, config);
    return matcher.run();
}

std::vector<SmellRates> refactoring_rates(const std::vector<VersionFindings>& versions,
                                          const std::vector<RefactoringAction>& actions) {
    std::map<SmellId, SmellRates> by_smell;
    std::map<SmellId, std::set<std::string>> symptomatic, refactored;
    for (SmellId id : all_smells()) by_smell[id].smell = id;

    for (const VersionFindings& v : versions) {
        for (const auto& [test, findings] : v.by_test) {
            for (const SmellFinding& f : findings) {
                by_smell[f.smell].symptom_nodes += f.count;
                if (f.count >= 1) symptomatic[f.smell].insert(test);
            }
        }
    }
    for (const RefactoringAction& a : actions) {
        ++by_smell[a.smell].action_count;
        refactored[a.smell].insert(a.tests.begin(), a.tests.end());
    }

    std::vector<SmellRates> out;
    for (SmellId id : all_smells()) {
        SmellRates& r = by_smell[id];
        r.tests_symptomatic = static_cast<long long>(symptomatic[id].size());
        long long hit = 0;
        for (const std::string& t : refactored[id])
            if (symptomatic[id].count(t)) ++hit;
        r.tests_refactored = hit;
        if (r.symptom_nodes > 0)
            r.rate = static_cast<double>(r.action_count) / static_cast<double>(r.symptom_nodes);
        if (r.tests_symptomatic > 0)
            r.percent_refactored = 100.0 * static_cast<double>(r.tests_refactored) /
                                   static_cast<double>(r.tests_symptomatic);
        out.push_back(r);
    }
    return out;
}

}  // namespace suitlint
