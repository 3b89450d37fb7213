#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace suitlint {

// Fatal error hierarchy. Non-fatal conditions travel as Diagnostics instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : Error {
    using Error::Error;
};
struct EncodingError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct DuplicateTestIdError : Error {
    using Error::Error;
};
struct RepoError : Error {
    using Error::Error;
};
struct RepoUnreadableError : RepoError {
    using RepoError::RepoError;
};
struct NoSuitVersionsError : RepoError {
    using RepoError::RepoError;
};
struct CheckoutError : RepoError {
    using RepoError::RepoError;
};
struct WriteError : Error {
    using Error::Error;
};

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::string collapse_ws(std::string_view s);

// Matching convention of the host framework: case-insensitive and
// blind to spaces/underscores. "Open Browser" == "open_browser".
std::string normalize_keyword_name(std::string_view name);

bool iequals(std::string_view a, std::string_view b);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool is_valid_utf8(std::string_view bytes);

// A variable reference as it occurs inside a cell: ${name}, @{name}, ...
struct VarRef {
    std::size_t begin = 0;  // offset of the sigil
    std::size_t end = 0;    // one past the closing brace
    char sigil = '$';
    std::string name;  // text between the braces
};

// Scans a cell for variable references, honoring one level of nesting
// in the name part (e.g. ${a${b}} is reported as one reference).
std::vector<VarRef> find_variable_refs(std::string_view cell);

// True when the whole cell is a single variable reference.
bool is_pure_variable(std::string_view cell);

}  // namespace suitlint
