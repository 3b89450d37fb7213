#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suitlint/source.hpp"

namespace suitlint {

// One source cell together with its byte range in the file.
struct Cell {
    std::string text;
    SourceSpan span;
    int line = 0;
};

struct CallStatement;

// One branch of a conditional block (IF / ELSE IF / ELSE).
struct ConditionalBranch {
    std::vector<Cell> header;  // condition cells; empty for ELSE
    std::vector<CallStatement> body;
    int line = 0;
};

struct CallStatement {
    enum class Kind { call, conditional, loop };

    Kind kind = Kind::call;

    // kind == call
    Cell callee;
    std::vector<Cell> args;
    std::vector<Cell> assigned;  // ${x}= style assignment targets

    // kind == conditional
    std::vector<ConditionalBranch> branches;

    // kind == loop
    std::vector<Cell> loop_header;
    std::vector<CallStatement> loop_body;

    SourceSpan span;
    int line = 0;
};

struct Setting {
    std::string name;
    std::vector<Cell> values;
    SourceSpan span;
    int line = 0;
};

struct VariableDef {
    std::string name;  // without the sigil and braces
    char sigil = '$';
    std::vector<Cell> values;
    SourceSpan span;
    int line = 0;
};

struct TestCaseAst {
    std::string name;
    std::vector<CallStatement> body;
    std::optional<CallStatement> setup;     // [Setup]
    std::optional<CallStatement> teardown;  // [Teardown]
    std::vector<Setting> bracket_settings;  // [Tags], [Timeout], ... kept opaque
    std::string documentation;
    SourceSpan span;
    int line = 0;
};

struct UserKeywordAst {
    std::string name;  // may contain embedded-argument placeholders
    std::vector<std::string> declared_arguments;  // from [Arguments], sans sigils
    std::vector<CallStatement> body;
    std::vector<Setting> bracket_settings;
    std::string documentation;
    SourceSpan span;
    int line = 0;
};

struct SuiteAst {
    SourceFile file;
    std::vector<Setting> settings;
    std::vector<TestCaseAst> test_cases;
    std::vector<UserKeywordAst> user_keywords;
    std::vector<VariableDef> variables;
    std::vector<Diagnostic> diagnostics;
};

}  // namespace suitlint
