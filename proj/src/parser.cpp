#include "suitlint/parser.hpp"

#include <array>
#include <cctype>
#include <optional>

#include "suitlint/util.hpp"

namespace suitlint {

namespace {

// A physical line split into cells, before continuation merging.
struct RawLine {
    std::vector<Cell> cells;
    bool indented = false;
    int line = 0;
    SourceSpan span;
};

// Splits one physical line into cells. A '#' at a token boundary opens a
// comment that runs to the end of the line.
RawLine split_line(const SourceFile& file, std::size_t begin, std::size_t end, int line_no) {
    const std::string& text = file.content();
    RawLine out;
    out.line = line_no;
    out.span = SourceSpan{begin, end};

    std::size_t i = begin;
    out.indented = i < end && (text[i] == ' ' || text[i] == '\t');
    while (i < end) {
        // skip separator run
        while (i < end && (text[i] == ' ' || text[i] == '\t')) ++i;
        if (i >= end) break;
        std::size_t cell_begin = i;
        bool comment = false;
        while (i < end) {
            if (text[i] == '\t') break;
            if (text[i] == ' ' && i + 1 < end && text[i + 1] == ' ') break;
            if (text[i] == '#' && (i == cell_begin || text[i - 1] == ' ' || text[i - 1] == '\t')) {
                comment = true;  // '#' at a token boundary comments out the rest
                break;
            }
            ++i;
        }
        // single trailing space inside a cell is not a separator; trim it
        std::size_t cell_end = i;
        while (cell_end > cell_begin && text[cell_end - 1] == ' ') --cell_end;
        std::string cell_text = text.substr(cell_begin, cell_end - cell_begin);
        if (comment) {
            if (!cell_text.empty())
                out.cells.push_back(
                    Cell{std::move(cell_text), SourceSpan{cell_begin, cell_end}, line_no});
            break;
        }
        if (!cell_text.empty())
            out.cells.push_back(Cell{std::move(cell_text), SourceSpan{cell_begin, cell_end}, line_no});
    }
    return out;
}

enum class Section { none, settings, test_cases, keywords, variables, unknown };

std::optional<Section> match_section(const std::string& first_cell_lower) {
    // Accept both singular and plural headers.
    if (first_cell_lower == "settings" || first_cell_lower == "setting") return Section::settings;
    if (first_cell_lower == "test cases" || first_cell_lower == "test case" ||
        first_cell_lower == "testcases")
        return Section::test_cases;
    if (first_cell_lower == "keywords" || first_cell_lower == "keyword") return Section::keywords;
    if (first_cell_lower == "variables" || first_cell_lower == "variable")
        return Section::variables;
    return std::nullopt;
}

bool is_section_header(const RawLine& line) {
    return !line.cells.empty() && line.cells[0].text.rfind("***", 0) == 0;
}

Section parse_section_header(const RawLine& line) {
    // Join all cells: "*** Test Cases ***" may split on the double spaces.
    std::string joined;
    for (const auto& c : line.cells) {
        if (!joined.empty()) joined += ' ';
        joined += c.text;
    }
    std::size_t b = 0, e = joined.size();
    while (b < e && (joined[b] == '*' || joined[b] == ' ')) ++b;
    while (e > b && (joined[e - 1] == '*' || joined[e - 1] == ' ')) --e;
    std::string name = collapse_ws(to_lower(joined.substr(b, e - b)));
    if (auto s = match_section(name)) return *s;
    return Section::unknown;
}

bool is_assignment_cell(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.back() == '=') {
        t.pop_back();
        while (!t.empty() && t.back() == ' ') t.pop_back();
    }
    return is_pure_variable(t);
}

std::string assignment_name(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.back() == '=') {
        t.pop_back();
        while (!t.empty() && t.back() == ' ') t.pop_back();
    }
    auto refs = find_variable_refs(t);
    return refs.empty() ? t : refs[0].name;
}

CallStatement make_call(const std::vector<Cell>& cells, std::size_t from) {
    CallStatement st;
    st.kind = CallStatement::Kind::call;
    st.line = cells[from].line;
    st.span = SourceSpan{cells[from].span.begin, cells.back().span.end};

    std::size_t i = from;
    while (i < cells.size() - 1 && is_assignment_cell(cells[i].text)) {
        Cell c = cells[i];
        c.text = assignment_name(c.text);
        st.assigned.push_back(std::move(c));
        ++i;
    }
    st.callee = cells[i];
    for (std::size_t k = i + 1; k < cells.size(); ++k) st.args.push_back(cells[k]);
    return st;
}

class BodyParser {
public:
    BodyParser(std::vector<CallStatement>& out, std::vector<Diagnostic>& diags,
               const std::string& path)
        : diags_(diags), path_(path) {
        stack_.push_back(Frame{&out, nullptr, false});
    }

    void feed(const RawLine& line) {
        const std::string& head = line.cells[0].text;
        std::vector<Cell> cells = line.cells;

        // Legacy loop bodies mark rows with a leading "\" cell.
        bool legacy_body = head == "\\";
        if (legacy_body) {
            cells.erase(cells.begin());
            if (cells.empty()) return;
        } else if (in_legacy_loop()) {
            close_legacy();
        }

        const std::string& first = cells[0].text;
        if (first == "END") {
            if (stack_.size() == 1) {
                diag(line.line, "END without an open block");
                return;
            }
            stack_.pop_back();
            return;
        }
        if (first == "ELSE" || first == "ELSE IF") {
            if (stack_.size() > 1 && stack_.back().cond) {
                ConditionalBranch br;
                br.line = line.line;
                for (std::size_t k = 1; k < cells.size(); ++k) br.header.push_back(cells[k]);
                stack_.back().cond->branches.push_back(std::move(br));
                stack_.back().target = &stack_.back().cond->branches.back().body;
                return;
            }
            diag(line.line, first + " outside of a conditional block");
            return;
        }
        if (first == "IF") {
            CallStatement st;
            st.kind = CallStatement::Kind::conditional;
            st.line = line.line;
            st.span = line.span;
            ConditionalBranch br;
            br.line = line.line;
            for (std::size_t k = 1; k < cells.size(); ++k) br.header.push_back(cells[k]);
            st.branches.push_back(std::move(br));
            current().push_back(std::move(st));
            CallStatement* stored = &current().back();
            stack_.push_back(Frame{&stored->branches.back().body, stored, false});
            return;
        }
        if (first == "FOR" || first == ":FOR" || first == ": FOR") {
            CallStatement st;
            st.kind = CallStatement::Kind::loop;
            st.line = line.line;
            st.span = line.span;
            for (std::size_t k = 1; k < cells.size(); ++k) st.loop_header.push_back(cells[k]);
            bool legacy = first != "FOR";
            current().push_back(std::move(st));
            CallStatement* stored = &current().back();
            stack_.push_back(Frame{&stored->loop_body, nullptr, legacy});
            return;
        }

        current().push_back(make_call(cells, 0));
    }

    void finish(int line) {
        if (in_legacy_loop()) close_legacy();
        while (stack_.size() > 1) {
            diag(line, "block not closed with END");
            stack_.pop_back();
        }
    }

private:
    struct Frame {
        std::vector<CallStatement>* target;
        CallStatement* cond;  // set while inside a conditional
        bool legacy_loop;
    };

    std::vector<CallStatement>& current() { return *stack_.back().target; }
    bool in_legacy_loop() const { return stack_.back().legacy_loop; }
    void close_legacy() { stack_.pop_back(); }

    void diag(int line, std::string msg) {
        diags_.push_back(Diagnostic{path_, line, Severity::warning, std::move(msg)});
    }

    std::vector<Frame> stack_;
    std::vector<Diagnostic>& diags_;
    const std::string& path_;
};

// Bracket settings recognized inside test/keyword blocks.
bool handle_bracket_setting(const RawLine& line, TestCaseAst* test, UserKeywordAst* keyword) {
    const std::string& head = line.cells[0].text;
    if (head.size() < 2 || head.front() != '[' || head.back() != ']') return false;
    std::string name = to_lower(trim(head.substr(1, head.size() - 2)));

    auto rest_call = [&]() -> std::optional<CallStatement> {
        if (line.cells.size() < 2) return std::nullopt;
        std::string callee_lower = to_lower(line.cells[1].text);
        if (callee_lower == "none" || callee_lower == "no operation") return std::nullopt;
        return make_call(line.cells, 1);
    };
    auto rest_text = [&]() {
        std::string text;
        for (std::size_t k = 1; k < line.cells.size(); ++k) {
            if (!text.empty()) text += ' ';
            text += line.cells[k].text;
        }
        return text;
    };

    if (name == "setup" && test) {
        test->setup = rest_call();
        return true;
    }
    if (name == "teardown" && test) {
        test->teardown = rest_call();
        return true;
    }
    if (name == "documentation") {
        if (test) test->documentation = rest_text();
        if (keyword) keyword->documentation = rest_text();
        return true;
    }
    if (name == "arguments" && keyword) {
        for (std::size_t k = 1; k < line.cells.size(); ++k) {
            auto refs = find_variable_refs(line.cells[k].text);
            std::string arg = refs.empty() ? line.cells[k].text : refs[0].name;
            // drop a "=default" suffix on the declaration
            if (auto pos = arg.find('='); refs.empty() && pos != std::string::npos)
                arg = arg.substr(0, pos);
            keyword->declared_arguments.push_back(arg);
        }
        return true;
    }

    Setting s;
    s.name = head.substr(1, head.size() - 2);
    for (std::size_t k = 1; k < line.cells.size(); ++k) s.values.push_back(line.cells[k]);
    s.span = line.span;
    s.line = line.line;
    if (test) test->bracket_settings.push_back(std::move(s));
    if (keyword) keyword->bracket_settings.push_back(std::move(s));
    return true;
}

}  // namespace

std::string strip_bdd_prefix(std::string_view step_name) {
    static const std::array<std::string_view, 5> prefixes = {"given", "when", "then", "and",
                                                             "but"};
    std::size_t ws = step_name.find_first_of(" \t");
    if (ws == std::string_view::npos) return std::string(step_name);
    std::string first = to_lower(step_name.substr(0, ws));
    for (auto p : prefixes) {
        if (first == p) {
            std::size_t rest = step_name.find_first_not_of(" \t", ws);
            if (rest == std::string_view::npos) return std::string(step_name);
            return std::string(step_name.substr(rest));
        }
    }
    return std::string(step_name);
}

SuiteAst parse_file(const SourceFile& file) {
    SuiteAst suite;
    suite.file = file;
    const std::string& text = file.content();

    if (!is_valid_utf8(text))
        throw EncodingError("file is not valid UTF-8: " + file.path());

    // Only the space-separated plain-text format is supported.
    std::string head = trim(text.substr(0, 64));
    if (!head.empty() && head[0] == '<') {
        suite.diagnostics.push_back(Diagnostic{file.path(), 1, Severity::error,
                                               "HTML format is not supported"});
        return suite;
    }

    // Phase 1: physical lines -> logical lines ("..." merges into the previous).
    std::vector<RawLine> lines;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        if (pos == text.size() && line_no > 0) break;
        std::size_t eol = text.find('\n', pos);
        std::size_t end = eol == std::string::npos ? text.size() : eol;
        std::size_t trimmed_end = end;
        if (trimmed_end > pos && text[trimmed_end - 1] == '\r') --trimmed_end;
        ++line_no;
        RawLine raw = split_line(file, pos, trimmed_end, line_no);
        if (!raw.cells.empty()) {
            if (raw.cells[0].text[0] == '|') {
                suite.diagnostics.push_back(Diagnostic{
                    file.path(), line_no, Severity::warning,
                    "pipe-separated row skipped; only the space-separated format is supported"});
            } else if (raw.cells[0].text == "..." && !lines.empty()) {
                for (std::size_t k = 1; k < raw.cells.size(); ++k)
                    lines.back().cells.push_back(raw.cells[k]);
                lines.back().span.end = raw.span.end;
            } else {
                lines.push_back(std::move(raw));
            }
        }
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }

    // Phase 2: interpret logical lines per section.
    Section section = Section::none;
    TestCaseAst* cur_test = nullptr;
    UserKeywordAst* cur_keyword = nullptr;
    std::optional<BodyParser> body;

    auto close_block = [&](int line) {
        if (body) body->finish(line);
        body.reset();
        cur_test = nullptr;
        cur_keyword = nullptr;
    };

    for (const RawLine& line : lines) {
        if (is_section_header(line)) {
            close_block(line.line);
            section = parse_section_header(line);
            if (section == Section::unknown) {
                suite.diagnostics.push_back(Diagnostic{
                    file.path(), line.line, Severity::warning,
                    "unknown section header; section skipped"});
            }
            continue;
        }

        switch (section) {
            case Section::none:
                suite.diagnostics.push_back(Diagnostic{file.path(), line.line, Severity::warning,
                                                       "content before any section"});
                break;
            case Section::unknown:
                break;  // owned by the stray-section diagnostic
            case Section::settings: {
                Setting s;
                s.name = line.cells[0].text;
                for (std::size_t k = 1; k < line.cells.size(); ++k)
                    s.values.push_back(line.cells[k]);
                s.span = line.span;
                s.line = line.line;
                suite.settings.push_back(std::move(s));
                break;
            }
            case Section::variables: {
                const std::string& head = line.cells[0].text;
                auto refs = find_variable_refs(head);
                bool pure = !refs.empty() && refs[0].begin == 0 &&
                            (refs[0].end == head.size() ||
                             trim(head.substr(refs[0].end)) == "=");
                if (!pure) {
                    suite.diagnostics.push_back(Diagnostic{file.path(), line.line,
                                                           Severity::warning,
                                                           "line is not a variable definition"});
                    break;
                }
                VariableDef v;
                v.name = refs[0].name;
                v.sigil = refs[0].sigil;
                for (std::size_t k = 1; k < line.cells.size(); ++k)
                    v.values.push_back(line.cells[k]);
                v.span = line.span;
                v.line = line.line;
                suite.variables.push_back(std::move(v));
                break;
            }
            case Section::test_cases:
            case Section::keywords: {
                if (!line.indented) {
                    close_block(line.line);
                    if (section == Section::test_cases) {
                        TestCaseAst t;
                        t.name = line.cells[0].text;
                        t.span = line.span;
                        t.line = line.line;
                        suite.test_cases.push_back(std::move(t));
                        cur_test = &suite.test_cases.back();
                        body.emplace(cur_test->body, suite.diagnostics, file.path());
                    } else {
                        UserKeywordAst k;
                        k.name = line.cells[0].text;
                        k.span = line.span;
                        k.line = line.line;
                        suite.user_keywords.push_back(std::move(k));
                        cur_keyword = &suite.user_keywords.back();
                        body.emplace(cur_keyword->body, suite.diagnostics, file.path());
                    }
                    // Cells after the name on the same row form the first statement.
                    if (line.cells.size() > 1) {
                        RawLine rest = line;
                        rest.cells.erase(rest.cells.begin());
                        if (!handle_bracket_setting(rest, cur_test, cur_keyword))
                            body->feed(rest);
                    }
                    break;
                }
                if (!cur_test && !cur_keyword) {
                    suite.diagnostics.push_back(Diagnostic{file.path(), line.line,
                                                           Severity::warning,
                                                           "statement outside any block"});
                    break;
                }
                if (handle_bracket_setting(line, cur_test, cur_keyword)) break;
                body->feed(line);
                break;
            }
        }
    }
    close_block(line_no);

    // Blocks must have names; an empty first cell cannot occur here because
    // empty cells are never emitted, so only whitespace names are possible.
    return suite;
}

}  // namespace suitlint
