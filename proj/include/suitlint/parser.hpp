#pragma once

#include <string>
#include <string_view>

#include "suitlint/ast.hpp"

namespace suitlint {

// Parses one plain-text keyword-driven test file (space-separated format,
// cells delimited by two or more spaces or a tab). Malformed lines become
// diagnostics on the returned AST; parsing itself never throws for syntax.
SuiteAst parse_file(const SourceFile& file);

// Removes a single leading Given/When/Then/And/But token (case-insensitive).
// Applying it again strips at most one more prefix, so "Given Given X"
// becomes "Given X" after one pass.
std::string strip_bdd_prefix(std::string_view step_name);

}  // namespace suitlint
