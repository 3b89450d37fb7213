#include "suitlint/clones.hpp"

#include <algorithm>

#include "suitlint/util.hpp"

namespace suitlint {

namespace {

using VarMap = std::map<std::string, int>;  // normalized variable name -> position

std::string normalize_cell(const std::string& text, CloneType type, VarMap* vars) {
    std::string base = collapse_ws(to_lower(text));
    if (type == CloneType::type1 || !vars) return base;

    // Rename variable tokens to positional placeholders.
    auto refs = find_variable_refs(base);
    if (refs.empty()) return base;
    std::string out;
    std::size_t pos = 0;
    for (const auto& r : refs) {
        out += base.substr(pos, r.begin - pos);
        std::string norm = normalize_keyword_name(r.name);
        auto [it, inserted] = vars->try_emplace(norm, static_cast<int>(vars->size()));
        out += "${v";
        out += std::to_string(it->second);
        out += "}";
        pos = r.end;
    }
    out += base.substr(pos);
    return out;
}

std::string normalize_callee(const std::string& text, CloneType type, VarMap* vars) {
    std::string cell = normalize_cell(text, type, vars);
    // keyword names match space/underscore-insensitively
    std::replace(cell.begin(), cell.end(), '_', ' ');
    return cell;
}

void serialize_statement(const CallStatement& st, CloneType type, VarMap* vars,
                         std::string& out) {
    switch (st.kind) {
        case CallStatement::Kind::call:
            out += "c(";
            for (const Cell& a : st.assigned) {
                out += normalize_cell(a.text, type, vars);
                out += "=";
            }
            out += normalize_callee(st.callee.text, type, vars);
            for (const Cell& a : st.args) {
                out += "\x1f";
                out += normalize_cell(a.text, type, vars);
            }
            out += ")";
            break;
        case CallStatement::Kind::conditional:
            out += "if(";
            for (const auto& br : st.branches) {
                out += "[";
                for (const Cell& h : br.header) {
                    out += normalize_cell(h.text, type, vars);
                    out += "\x1f";
                }
                out += ":";
                for (const auto& s : br.body) serialize_statement(s, type, vars, out);
                out += "]";
            }
            out += ")";
            break;
        case CallStatement::Kind::loop:
            out += "for(";
            for (const Cell& h : st.loop_header) {
                out += normalize_cell(h.text, type, vars);
                out += "\x1f";
            }
            out += ":";
            for (const auto& s : st.loop_body) serialize_statement(s, type, vars, out);
            out += ")";
            break;
    }
}

}  // namespace

std::string normalize_body(const std::vector<CallStatement>& body, CloneType type) {
    VarMap vars;
    std::string out;
    for (const auto& st : body)
        serialize_statement(st, type, type == CloneType::type2 ? &vars : nullptr, out);
    return out;
}

std::string normalize_statement(const CallStatement& stmt, CloneType type) {
    VarMap vars;
    std::string out;
    serialize_statement(stmt, type, type == CloneType::type2 ? &vars : nullptr, out);
    return out;
}

void CloneIndex::add(const std::string& def_key, const std::vector<CallStatement>& body) {
    if (body.size() < 2) return;
    type1_groups_[normalize_body(body, CloneType::type1)].push_back(def_key);
    type2_groups_[normalize_body(body, CloneType::type2)].push_back(def_key);
}

void CloneIndex::seal() {
    clones_type1_.clear();
    clones_type2_.clear();
    for (const auto& [hash, members] : type1_groups_)
        if (members.size() >= 2) clones_type1_.insert(members.begin(), members.end());
    for (const auto& [hash, members] : type2_groups_)
        if (members.size() >= 2) clones_type2_.insert(members.begin(), members.end());
}

bool CloneIndex::is_clone(const std::string& def_key, CloneType type) const {
    return clone_set(type).count(def_key) > 0;
}

const std::set<std::string>& CloneIndex::clone_set(CloneType type) const {
    return type == CloneType::type1 ? clones_type1_ : clones_type2_;
}

std::vector<std::vector<std::string>> CloneIndex::classes(CloneType type) const {
    std::vector<std::vector<std::string>> out;
    const auto& groups = type == CloneType::type1 ? type1_groups_ : type2_groups_;
    for (const auto& [hash, members] : groups)
        if (members.size() >= 2) out.push_back(members);
    return out;
}

CloneIndex find_clones(const Snapshot& snapshot) {
    CloneIndex index;
    for (const auto& def : snapshot.keywords) index.add(def->key(), def->ast->body);
    index.seal();
    return index;
}

}  // namespace suitlint
