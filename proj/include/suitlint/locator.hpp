#pragma once

#include <string_view>

namespace suitlint {

// Number of GUI elements a locator string traverses to reach its target.
//
//   XPath   — one per path step: "/html/body/div[4]/button" -> 4, while a
//             descendant lookup like "//button[@id='x']" -> 1.
//   CSS     — one per combinator-separated compound selector:
//             "css:div > form input" -> 3.
//   bare id/name strings and explicit id=/name= strategies -> 1.
int locator_element_count(std::string_view locator);

}  // namespace suitlint
