#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace suitlint {

enum class Category { interaction, assertion, controlflow, getter, logging, sync };

const char* category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);

enum class EntryFlag { configuration, action, sleep, log };

struct CatalogEntry {
    std::string name;  // display name as listed
    Category category = Category::interaction;
    std::set<EntryFlag> flags;
    std::optional<int> expected_arg_index;  // 1-based
    std::set<int> locator_arg_indices;      // 1-based
    std::set<int> config_arg_indices;       // 1-based

    bool has_flag(EntryFlag f) const { return flags.count(f) > 0; }
};

// Registry of library keywords keyed by normalized name.
class KeywordCatalog {
public:
    const CatalogEntry* find(std::string_view name) const;
    void add(CatalogEntry entry);  // replaces an existing entry with the same key
    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, CatalogEntry>& entries() const { return entries_; }

private:
    std::map<std::string, CatalogEntry> entries_;
};

// Built-in table: standard-library and Selenium-style web keywords.
KeywordCatalog default_catalog();

// Parses the line-oriented catalog format:
//   name | CATEGORY | flags=a,b | expected=i | locators=i,j | config=i
// '#' lines and blank lines are skipped. Throws ConfigError on bad input.
KeywordCatalog parse_catalog(std::string_view text, const std::string& origin);

// Default catalog merged with overrides from a file; overrides win.
// An empty path returns the default catalog unchanged.
KeywordCatalog load_catalog(const std::string& override_path);

// The built-in table in the catalog file format, for documentation dumps.
std::string default_catalog_text();

}  // namespace suitlint
