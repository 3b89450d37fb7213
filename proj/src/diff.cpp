#include "suitlint/diff.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "suitlint/clones.hpp"
#include "suitlint/parser.hpp"
#include "suitlint/util.hpp"

namespace suitlint {

namespace {

StmtInfo stmt_info(const CallStatement& st) {
    StmtInfo info;
    info.norm = normalize_statement(st, CloneType::type2);
    switch (st.kind) {
        case CallStatement::Kind::call:
            info.kind = "call";
            info.callee = st.callee.text;
            info.callee_norm = normalize_keyword_name(st.callee.text);
            for (const Cell& a : st.args) info.args.push_back(a.text);
            break;
        case CallStatement::Kind::conditional:
            info.kind = "conditional";
            info.callee_norm = "#if";
            for (const auto& br : st.branches)
                for (const auto& s : br.body)
                    info.nested_norms.push_back(normalize_statement(s, CloneType::type2));
            break;
        case CallStatement::Kind::loop:
            info.kind = "loop";
            info.callee_norm = "#for";
            for (const auto& s : st.loop_body)
                info.nested_norms.push_back(normalize_statement(s, CloneType::type2));
            break;
    }
    return info;
}

bool cell_is_literal(const std::string& text) { return find_variable_refs(text).empty(); }

struct DefRef {
    const SuiteAst* suite = nullptr;
    const TestCaseAst* test = nullptr;
    const UserKeywordAst* keyword = nullptr;

    const std::vector<CallStatement>& body() const {
        return test ? test->body : keyword->body;
    }
};

// owner key -> definition
using DefMap = std::map<std::string, DefRef>;

DefMap collect_defs(const Snapshot& snap, bool tests) {
    DefMap out;
    for (const auto& f : snap.files) {
        if (tests) {
            for (const auto& t : f->test_cases)
                out[f->file.path() + "|" + normalize_keyword_name(t.name)] =
                    DefRef{f.get(), &t, nullptr};
        } else {
            for (const auto& k : f->user_keywords) {
                std::string key = f->file.path() + "|" + normalize_keyword_name(k.name);
                if (!out.count(key)) out[key] = DefRef{f.get(), nullptr, &k};
            }
        }
    }
    return out;
}

NodeLoc def_loc(const std::string& file, const char* owner_kind, const std::string& owner,
                int line, const std::string& label) {
    return NodeLoc{file, owner_kind, owner, "body", {}, 0, line, label};
}

class Differ {
public:
    Differ(const Snapshot& v1, const Snapshot& v2, const DiffOptions& options)
        : v1_(v1), v2_(v2), options_(options) {}

    std::vector<FineGrainedChange> run() {
        diff_keywords();
        diff_tests();
        diff_variables();
        diff_settings();
        return std::move(changes_);
    }

private:
    void diff_keywords() {
        DefMap before = collect_defs(v1_, false);
        DefMap after = collect_defs(v2_, false);

        std::vector<std::string> removed, added;
        for (const auto& [key, ref] : before)
            if (!after.count(key)) removed.push_back(key);
        for (const auto& [key, ref] : after)
            if (!before.count(key)) added.push_back(key);

        // Rename pass: identical body + enough callers retargeted.
        std::set<std::string> consumed_removed, consumed_added;
        for (const std::string& rkey : removed) {
            const DefRef& r = before.at(rkey);
            std::string rbody = normalize_body(r.keyword->body, CloneType::type1);
            for (const std::string& akey : added) {
                if (consumed_added.count(akey)) continue;
                const DefRef& a = after.at(akey);
                if (normalize_body(a.keyword->body, CloneType::type1) != rbody) continue;
                if (!enough_callers_retargeted(r, a)) continue;
                FineGrainedChange c;
                c.kind = ChangeKind::name_changed;
                c.level = ChangeLevel::definition;
                c.before = def_loc(r.suite->file.path(), "keyword",
                                   normalize_keyword_name(r.keyword->name), r.keyword->line,
                                   "keyword " + r.keyword->name);
                c.after = def_loc(a.suite->file.path(), "keyword",
                                  normalize_keyword_name(a.keyword->name), a.keyword->line,
                                  "keyword " + a.keyword->name);
                c.before_text = r.keyword->name;
                c.after_text = a.keyword->name;
                c.description = "keyword renamed: " + r.keyword->name + " -> " + a.keyword->name;
                changes_.push_back(std::move(c));
                consumed_removed.insert(rkey);
                consumed_added.insert(akey);
                break;
            }
        }

        for (const std::string& key : removed) {
            if (consumed_removed.count(key)) continue;
            const DefRef& r = before.at(key);
            FineGrainedChange c;
            c.kind = ChangeKind::node_removed;
            c.level = ChangeLevel::definition;
            c.before = def_loc(r.suite->file.path(), "keyword",
                               normalize_keyword_name(r.keyword->name), r.keyword->line,
                               "keyword " + r.keyword->name);
            c.description = "keyword removed: " + r.keyword->name;
            changes_.push_back(std::move(c));
        }
        for (const std::string& key : added) {
            if (consumed_added.count(key)) continue;
            const DefRef& a = after.at(key);
            FineGrainedChange c;
            c.kind = ChangeKind::node_added;
            c.level = ChangeLevel::definition;
            c.after = def_loc(a.suite->file.path(), "keyword",
                              normalize_keyword_name(a.keyword->name), a.keyword->line,
                              "keyword " + a.keyword->name);
            c.description = "keyword added: " + a.keyword->name;
            changes_.push_back(std::move(c));
        }

        for (const auto& [key, r] : before) {
            auto it = after.find(key);
            if (it == after.end()) continue;
            NodeLoc base_b = def_loc(r.suite->file.path(), "keyword",
                                     normalize_keyword_name(r.keyword->name), r.keyword->line, "");
            NodeLoc base_a = def_loc(it->second.suite->file.path(), "keyword",
                                     normalize_keyword_name(it->second.keyword->name),
                                     it->second.keyword->line, "");
            align_bodies(r.keyword->body, it->second.keyword->body, base_b, base_a);
        }
    }

    void diff_tests() {
        DefMap before = collect_defs(v1_, true);
        DefMap after = collect_defs(v2_, true);

        for (const auto& [key, r] : before) {
            if (after.count(key)) continue;
            FineGrainedChange c;
            c.kind = ChangeKind::node_removed;
            c.level = ChangeLevel::definition;
            c.before = def_loc(r.suite->file.path(), "test", normalize_keyword_name(r.test->name),
                               r.test->line, "test " + r.test->name);
            c.description = "test removed: " + r.test->name;
            changes_.push_back(std::move(c));
        }
        for (const auto& [key, a] : after) {
            if (before.count(key)) continue;
            FineGrainedChange c;
            c.kind = ChangeKind::node_added;
            c.level = ChangeLevel::definition;
            c.after = def_loc(a.suite->file.path(), "test", normalize_keyword_name(a.test->name),
                              a.test->line, "test " + a.test->name);
            c.description = "test added: " + a.test->name;
            changes_.push_back(std::move(c));
        }
        for (const auto& [key, r] : before) {
            auto it = after.find(key);
            if (it == after.end()) continue;
            const DefRef& a = it->second;
            NodeLoc base_b = def_loc(r.suite->file.path(), "test",
                                     normalize_keyword_name(r.test->name), r.test->line, "");
            NodeLoc base_a = def_loc(a.suite->file.path(), "test",
                                     normalize_keyword_name(a.test->name), a.test->line, "");
            align_bodies(r.test->body, a.test->body, base_b, base_a);
            diff_fixture_slot(r.test->setup, a.test->setup, base_b, base_a, "setup");
            diff_fixture_slot(r.test->teardown, a.test->teardown, base_b, base_a, "teardown");
        }
    }

    void diff_fixture_slot(const std::optional<CallStatement>& before,
                           const std::optional<CallStatement>& after, NodeLoc base_b,
                           NodeLoc base_a, const char* slot) {
        base_b.slot = slot;
        base_a.slot = slot;
        std::vector<CallStatement> b, a;
        if (before) b.push_back(*before);
        if (after) a.push_back(*after);
        align_bodies(b, a, base_b, base_a);
    }

    void diff_variables() {
        auto collect = [](const Snapshot& snap) {
            std::map<std::string, std::pair<const SuiteAst*, const VariableDef*>> out;
            for (const auto& f : snap.files)
                for (const auto& v : f->variables) {
                    std::string key = f->file.path() + "|" + normalize_keyword_name(v.name);
                    if (!out.count(key)) out[key] = {f.get(), &v};
                }
            return out;
        };
        auto value_text = [](const VariableDef& v) {
            std::string out;
            for (std::size_t i = 0; i < v.values.size(); ++i) {
                if (i) out += ' ';
                out += v.values[i].text;
            }
            return out;
        };
        auto before = collect(v1_);
        auto after = collect(v2_);
        for (const auto& [key, b] : before) {
            auto it = after.find(key);
            NodeLoc loc{b.first->file.path(), "variables", normalize_keyword_name(b.second->name),
                        "body",               {},          0,
                        b.second->line,       "variable ${" + b.second->name + "}"};
            if (it == after.end()) {
                FineGrainedChange c;
                c.kind = ChangeKind::node_removed;
                c.level = ChangeLevel::variable;
                c.before = loc;
                c.before_text = value_text(*b.second);
                c.description = "variable removed: ${" + b.second->name + "}";
                changes_.push_back(std::move(c));
                continue;
            }
            std::string vb = value_text(*b.second);
            std::string va = value_text(*it->second.second);
            if (vb != va) {
                FineGrainedChange c;
                c.kind = ChangeKind::value_changed;
                c.level = ChangeLevel::variable;
                c.before = loc;
                c.after = loc;
                c.after.line = it->second.second->line;
                c.before_text = vb;
                c.after_text = va;
                c.description = "variable value changed: ${" + b.second->name + "}";
                changes_.push_back(std::move(c));
            }
        }
        for (const auto& [key, a] : after) {
            if (before.count(key)) continue;
            FineGrainedChange c;
            c.kind = ChangeKind::node_added;
            c.level = ChangeLevel::variable;
            c.after = NodeLoc{a.first->file.path(),
                              "variables",
                              normalize_keyword_name(a.second->name),
                              "body",
                              {},
                              0,
                              a.second->line,
                              "variable ${" + a.second->name + "}"};
            c.after_text = value_text(*a.second);
            c.description = "variable added: ${" + a.second->name + "}";
            changes_.push_back(std::move(c));
        }
    }

    void diff_settings() {
        // Fixture-bearing settings become one-statement bodies, so edits to
        // them surface exactly like fixture-slot edits.
        static const char* kFixtureSettings[] = {"suite setup", "suite teardown", "test setup",
                                                 "test teardown"};
        auto collect = [](const Snapshot& snap, const char* name) {
            std::map<std::string, std::pair<const SuiteAst*, const Setting*>> out;
            for (const auto& f : snap.files)
                for (const auto& s : f->settings)
                    if (normalize_keyword_name(s.name) == normalize_keyword_name(name) &&
                        !s.values.empty())
                        out[f->file.path()] = {f.get(), &s};
            return out;
        };
        for (const char* name : kFixtureSettings) {
            auto before = collect(v1_, name);
            auto after = collect(v2_, name);
            std::set<std::string> files;
            for (const auto& [f, s] : before) files.insert(f);
            for (const auto& [f, s] : after) files.insert(f);
            for (const std::string& file : files) {
                std::vector<CallStatement> b, a;
                int line_b = 0, line_a = 0;
                if (auto it = before.find(file); it != before.end()) {
                    b.push_back(setting_call(*it->second.second));
                    line_b = it->second.second->line;
                }
                if (auto it = after.find(file); it != after.end()) {
                    a.push_back(setting_call(*it->second.second));
                    line_a = it->second.second->line;
                }
                const char* slot =
                    std::string_view(name).find("teardown") != std::string_view::npos
                        ? "teardown"
                        : "setup";
                NodeLoc base_b{file, "settings", normalize_keyword_name(name), slot, {}, 0,
                               line_b, ""};
                NodeLoc base_a = base_b;
                base_a.line = line_a;
                align_bodies(b, a, base_b, base_a);
            }
        }
    }

    static CallStatement setting_call(const Setting& s) {
        CallStatement call;
        call.callee = s.values[0];
        for (std::size_t i = 1; i < s.values.size(); ++i) call.args.push_back(s.values[i]);
        call.line = s.line;
        call.span = s.span;
        return call;
    }

    // ---- statement alignment ----

    void align_bodies(const std::vector<CallStatement>& before,
                      const std::vector<CallStatement>& after, const NodeLoc& base_b,
                      const NodeLoc& base_a) {
        std::vector<std::string> nb, na;
        for (const auto& s : before) nb.push_back(normalize_statement(s, CloneType::type2));
        for (const auto& s : after) na.push_back(normalize_statement(s, CloneType::type2));

        // LCS table.
        const std::size_t n = nb.size(), m = na.size();
        std::vector<std::vector<std::size_t>> lcs(n + 1, std::vector<std::size_t>(m + 1, 0));
        for (std::size_t i = n; i-- > 0;)
            for (std::size_t j = m; j-- > 0;)
                lcs[i][j] = nb[i] == na[j] ? lcs[i + 1][j + 1] + 1
                                           : std::max(lcs[i + 1][j], lcs[i][j + 1]);

        std::vector<std::pair<std::size_t, std::size_t>> gap_b_runs, gap_a_runs;
        std::size_t i = 0, j = 0;
        std::vector<std::size_t> gap_b, gap_a;
        auto flush_gap = [&]() {
            if (!gap_b.empty() || !gap_a.empty()) pair_gap(before, after, gap_b, gap_a, base_b, base_a);
            gap_b.clear();
            gap_a.clear();
        };
        while (i < n && j < m) {
            if (nb[i] == na[j]) {
                flush_gap();
                recurse_equal(before[i], after[j], child_loc(base_b, i), child_loc(base_a, j));
                ++i;
                ++j;
            } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
                gap_b.push_back(i++);
            } else {
                gap_a.push_back(j++);
            }
        }
        while (i < n) gap_b.push_back(i++);
        while (j < m) gap_a.push_back(j++);
        flush_gap();
    }

    static NodeLoc child_loc(const NodeLoc& base, std::size_t index) {
        NodeLoc loc = base;
        loc.stmt_path.push_back(static_cast<int>(index));
        return loc;
    }

    // Statements equal under type-2 normalization still need no reporting;
    // identical structure guarantees identical nested statements.
    void recurse_equal(const CallStatement&, const CallStatement&, const NodeLoc&,
                       const NodeLoc&) {}

    void pair_gap(const std::vector<CallStatement>& before,
                  const std::vector<CallStatement>& after, const std::vector<std::size_t>& gap_b,
                  const std::vector<std::size_t>& gap_a, const NodeLoc& base_b,
                  const NodeLoc& base_a) {
        std::vector<bool> used_b(gap_b.size(), false), used_a(gap_a.size(), false);

        auto callee_key = [](const CallStatement& s) {
            switch (s.kind) {
                case CallStatement::Kind::call:
                    return "c:" + normalize_keyword_name(s.callee.text);
                case CallStatement::Kind::conditional:
                    return std::string("#if");
                case CallStatement::Kind::loop:
                    return std::string("#for");
            }
            return std::string();
        };

        // pass 1: same callee (or same block kind) pairs positionally
        for (std::size_t x = 0; x < gap_b.size(); ++x) {
            for (std::size_t y = 0; y < gap_a.size(); ++y) {
                if (used_a[y]) continue;
                const CallStatement& sb = before[gap_b[x]];
                const CallStatement& sa = after[gap_a[y]];
                if (callee_key(sb) != callee_key(sa)) continue;
                used_b[x] = true;
                used_a[y] = true;
                diff_paired(sb, sa, child_loc(base_b, gap_b[x]), child_loc(base_a, gap_a[y]),
                            false);
                break;
            }
        }
        // pass 2: plain calls with identical argument lists -> callee change
        for (std::size_t x = 0; x < gap_b.size(); ++x) {
            if (used_b[x]) continue;
            const CallStatement& sb = before[gap_b[x]];
            if (sb.kind != CallStatement::Kind::call) continue;
            for (std::size_t y = 0; y < gap_a.size(); ++y) {
                if (used_a[y]) continue;
                const CallStatement& sa = after[gap_a[y]];
                if (sa.kind != CallStatement::Kind::call) continue;
                if (!same_args(sb, sa)) continue;
                used_b[x] = true;
                used_a[y] = true;
                diff_paired(sb, sa, child_loc(base_b, gap_b[x]), child_loc(base_a, gap_a[y]),
                            true);
                break;
            }
        }
        // pass 3: leftovers
        for (std::size_t x = 0; x < gap_b.size(); ++x) {
            if (used_b[x]) continue;
            FineGrainedChange c;
            c.kind = ChangeKind::node_removed;
            c.level = ChangeLevel::statement;
            c.before = child_loc(base_b, gap_b[x]);
            c.before.line = before[gap_b[x]].line;
            c.before_stmt = stmt_info(before[gap_b[x]]);
            c.description = "statement removed: " + describe(before[gap_b[x]]);
            changes_.push_back(std::move(c));
        }
        for (std::size_t y = 0; y < gap_a.size(); ++y) {
            if (used_a[y]) continue;
            FineGrainedChange c;
            c.kind = ChangeKind::node_added;
            c.level = ChangeLevel::statement;
            c.after = child_loc(base_a, gap_a[y]);
            c.after.line = after[gap_a[y]].line;
            c.after_stmt = stmt_info(after[gap_a[y]]);
            c.description = "statement added: " + describe(after[gap_a[y]]);
            changes_.push_back(std::move(c));
        }
    }

    static bool same_args(const CallStatement& a, const CallStatement& b) {
        if (a.args.size() != b.args.size()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (collapse_ws(to_lower(a.args[i].text)) != collapse_ws(to_lower(b.args[i].text)))
                return false;
        return true;
    }

    static std::string describe(const CallStatement& s) {
        switch (s.kind) {
            case CallStatement::Kind::call: return s.callee.text;
            case CallStatement::Kind::conditional: return "IF block";
            case CallStatement::Kind::loop: return "FOR block";
        }
        return "";
    }

    void diff_paired(const CallStatement& sb, const CallStatement& sa, const NodeLoc& loc_b,
                     const NodeLoc& loc_a, bool callee_changed) {
        if (sb.kind == CallStatement::Kind::conditional &&
            sa.kind == CallStatement::Kind::conditional) {
            std::size_t branches = std::min(sb.branches.size(), sa.branches.size());
            for (std::size_t b = 0; b < branches; ++b) {
                align_bodies(sb.branches[b].body, sa.branches[b].body, child_loc(loc_b, b),
                             child_loc(loc_a, b));
            }
            for (std::size_t b = branches; b < sb.branches.size(); ++b) {
                FineGrainedChange c;
                c.kind = ChangeKind::node_removed;
                c.level = ChangeLevel::statement;
                c.before = child_loc(loc_b, b);
                c.before_stmt = stmt_info(sb);
                c.description = "conditional branch removed";
                changes_.push_back(std::move(c));
            }
            for (std::size_t b = branches; b < sa.branches.size(); ++b) {
                FineGrainedChange c;
                c.kind = ChangeKind::node_added;
                c.level = ChangeLevel::statement;
                c.after = child_loc(loc_a, b);
                c.after_stmt = stmt_info(sa);
                c.description = "conditional branch added";
                changes_.push_back(std::move(c));
            }
            return;
        }
        if (sb.kind == CallStatement::Kind::loop && sa.kind == CallStatement::Kind::loop) {
            align_bodies(sb.loop_body, sa.loop_body, child_loc(loc_b, 0), child_loc(loc_a, 0));
            return;
        }
        if (sb.kind != CallStatement::Kind::call || sa.kind != CallStatement::Kind::call) return;

        if (callee_changed) {
            FineGrainedChange c;
            c.kind = ChangeKind::name_changed;
            c.level = ChangeLevel::statement;
            c.before = loc_b;
            c.before.line = sb.line;
            c.after = loc_a;
            c.after.line = sa.line;
            c.before_stmt = stmt_info(sb);
            c.after_stmt = stmt_info(sa);
            c.before_text = sb.callee.text;
            c.after_text = sa.callee.text;
            c.description = "call renamed: " + sb.callee.text + " -> " + sa.callee.text;
            changes_.push_back(std::move(c));
        }

        const std::size_t args = std::max(sb.args.size(), sa.args.size());
        for (std::size_t k = 0; k < args; ++k) {
            const bool has_b = k < sb.args.size();
            const bool has_a = k < sa.args.size();
            FineGrainedChange c;
            c.level = ChangeLevel::argument;
            c.before = loc_b;
            c.before.arg_index = static_cast<int>(k) + 1;
            c.before.line = sb.line;
            c.after = loc_a;
            c.after.arg_index = static_cast<int>(k) + 1;
            c.after.line = sa.line;
            c.before_stmt = stmt_info(sb);
            c.after_stmt = stmt_info(sa);
            if (has_b && has_a) {
                if (sb.args[k].text == sa.args[k].text) continue;
                c.before_text = sb.args[k].text;
                c.after_text = sa.args[k].text;
                c.before_is_literal = cell_is_literal(c.before_text);
                c.after_is_literal = cell_is_literal(c.after_text);
                c.kind = c.before_is_literal == c.after_is_literal ? ChangeKind::value_changed
                                                                   : ChangeKind::argument_changed;
                c.description = "argument " + std::to_string(k + 1) + " changed: '" +
                                c.before_text + "' -> '" + c.after_text + "'";
            } else if (has_b) {
                c.kind = ChangeKind::argument_changed;
                c.before_text = sb.args[k].text;
                c.before_is_literal = cell_is_literal(c.before_text);
                c.after = NodeLoc{};
                c.description = "argument " + std::to_string(k + 1) + " removed";
            } else {
                c.kind = ChangeKind::argument_changed;
                c.after_text = sa.args[k].text;
                c.after_is_literal = cell_is_literal(c.after_text);
                c.before = NodeLoc{};
                c.description = "argument " + std::to_string(k + 1) + " added";
            }
            changes_.push_back(std::move(c));
        }

        // Assignment target changes matter for dataflow but have no
        // dedicated pattern; report them as a generic modification.
        if (!callee_changed) {
            auto norm_assigned = [](const CallStatement& s) {
                std::vector<std::string> out;
                for (const Cell& a : s.assigned) out.push_back(normalize_keyword_name(a.text));
                return out;
            };
            if (norm_assigned(sb) != norm_assigned(sa)) {
                FineGrainedChange c;
                c.kind = ChangeKind::node_modified;
                c.level = ChangeLevel::statement;
                c.before = loc_b;
                c.after = loc_a;
                c.before_stmt = stmt_info(sb);
                c.after_stmt = stmt_info(sa);
                c.description = "assignment targets changed";
                changes_.push_back(std::move(c));
            }
        }
    }

    bool enough_callers_retargeted(const DefRef& removed, const DefRef& added) const {
        std::string old_name = normalize_keyword_name(removed.keyword->name);
        std::string new_name = normalize_keyword_name(added.keyword->name);
        int callers_before = count_callers(v1_, old_name);
        if (callers_before == 0) return false;
        int callers_after = count_callers(v2_, new_name);
        return static_cast<double>(callers_after) >=
               options_.rename_caller_ratio * static_cast<double>(callers_before);
    }

    static bool callee_matches(const std::string& callee, const std::string& norm_name) {
        if (normalize_keyword_name(callee) == norm_name) return true;
        return normalize_keyword_name(strip_bdd_prefix(callee)) == norm_name;
    }

    static void count_in_body(const std::vector<CallStatement>& body, const std::string& name,
                              int& count) {
        for (const auto& s : body) {
            switch (s.kind) {
                case CallStatement::Kind::call:
                    if (callee_matches(s.callee.text, name)) ++count;
                    break;
                case CallStatement::Kind::conditional:
                    for (const auto& br : s.branches) count_in_body(br.body, name, count);
                    break;
                case CallStatement::Kind::loop:
                    count_in_body(s.loop_body, name, count);
                    break;
            }
        }
    }

    static int count_callers(const Snapshot& snap, const std::string& norm_name) {
        int count = 0;
        for (const auto& f : snap.files) {
            for (const auto& t : f->test_cases) {
                count_in_body(t.body, norm_name, count);
                if (t.setup && callee_matches(t.setup->callee.text, norm_name)) ++count;
                if (t.teardown && callee_matches(t.teardown->callee.text, norm_name)) ++count;
            }
            for (const auto& k : f->user_keywords) count_in_body(k.body, norm_name, count);
            for (const auto& s : f->settings) {
                if (s.values.empty()) continue;
                std::string n = normalize_keyword_name(s.name);
                if ((n == "suitesetup" || n == "suiteteardown" || n == "testsetup" ||
                     n == "testteardown") &&
                    callee_matches(s.values[0].text, norm_name))
                    ++count;
            }
        }
        return count;
    }

    const Snapshot& v1_;
    const Snapshot& v2_;
    const DiffOptions& options_;
    std::vector<FineGrainedChange> changes_;
};

}  // namespace

const char* change_kind_name(ChangeKind k) {
    switch (k) {
        case ChangeKind::node_added: return "node-added";
        case ChangeKind::node_removed: return "node-removed";
        case ChangeKind::node_modified: return "node-modified";
        case ChangeKind::name_changed: return "name-changed";
        case ChangeKind::argument_changed: return "argument-changed";
        case ChangeKind::value_changed: return "value-changed";
    }
    return "?";
}

const char* change_level_name(ChangeLevel l) {
    switch (l) {
        case ChangeLevel::definition: return "definition";
        case ChangeLevel::statement: return "statement";
        case ChangeLevel::argument: return "argument";
        case ChangeLevel::variable: return "variable";
    }
    return "?";
}

std::vector<FineGrainedChange> diff_snapshots(const Snapshot& v1, const Snapshot& v2,
                                              const DiffOptions& options) {
    Differ differ(v1, v2, options);
    return differ.run();
}

}  // namespace suitlint
