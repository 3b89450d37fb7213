#include "suitlint/locator.hpp"

#include <cctype>
#include <string>

#include "suitlint/util.hpp"

namespace suitlint {

namespace {

bool strip_strategy(std::string& s, const char* name) {
    std::size_t n = std::char_traits<char>::length(name);
    if (s.size() <= n) return false;
    if (!iequals(std::string_view(s).substr(0, n), name)) return false;
    if (s[n] != '=' && s[n] != ':') return false;
    s = trim(s.substr(n + 1));
    return true;
}

int count_xpath_steps(const std::string& xpath) {
    // Split on '/' outside of brackets and quotes; "//" introduces a
    // descendant axis and is not a step by itself.
    int steps = 0;
    int bracket = 0;
    char quote = 0;
    std::size_t i = 0;
    bool in_step = false;
    while (i < xpath.size()) {
        char c = xpath[i];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '\'' || c == '"') {
            quote = c;
        } else if (c == '[') {
            ++bracket;
        } else if (c == ']') {
            if (bracket > 0) --bracket;
        } else if (c == '/' && bracket == 0) {
            in_step = false;
            ++i;
            continue;
        }
        if (!in_step && !(c == '/' && bracket == 0)) {
            in_step = true;
            ++steps;
        }
        ++i;
    }
    return steps > 0 ? steps : 1;
}

int count_css_compounds(const std::string& css) {
    // Compound selectors are separated by combinators: whitespace, '>',
    // '+', '~' (outside brackets/quotes/parens).
    int compounds = 0;
    int depth = 0;
    char quote = 0;
    bool in_compound = false;
    for (char c : css) {
        if (quote) {
            if (c == quote) quote = 0;
            continue;
        }
        if (c == '\'' || c == '"') {
            quote = c;
            in_compound = true;
            continue;
        }
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') {
            if (depth > 0) --depth;
        }
        bool separator =
            depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == '>' ||
                           c == '+' || c == '~');
        if (separator) {
            in_compound = false;
        } else if (!in_compound) {
            in_compound = true;
            ++compounds;
        }
    }
    return compounds > 0 ? compounds : 1;
}

}  // namespace

int locator_element_count(std::string_view locator_in) {
    std::string locator = trim(locator_in);
    if (locator.empty()) return 1;

    // Explicit single-element strategies.
    for (const char* strategy : {"id", "name", "identifier", "link", "partial link", "tag",
                                 "class", "dom", "jquery", "sizzle", "data"}) {
        std::string tmp = locator;
        if (strip_strategy(tmp, strategy)) return 1;
    }
    std::string rest = locator;
    if (strip_strategy(rest, "xpath")) return count_xpath_steps(rest);
    if (strip_strategy(rest, "css")) return count_css_compounds(rest);

    // Unprefixed XPath starts with '/' or '('.
    if (locator[0] == '/') return count_xpath_steps(locator);
    if (locator[0] == '(') {
        std::string inner = trim(locator.substr(1));
        if (!inner.empty() && inner[0] == '/') return count_xpath_steps(inner);
    }

    return 1;  // bare id/name string
}

}  // namespace suitlint
