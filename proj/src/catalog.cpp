#include "suitlint/catalog.hpp"

#include <fstream>
#include <sstream>

#include "suitlint/util.hpp"

namespace suitlint {

namespace {

// Default table. INTERACTION entries receive the "action" flag implicitly
// unless a flags= field is given; entries with config= indices receive
// "configuration" the same way.
constexpr const char* kDefaultCatalog = R"(
# Standard library
Sleep | SYNC | flags=sleep
Wait Until Keyword Succeeds | SYNC
Log | LOGGING | flags=log
Log Many | LOGGING | flags=log
Log To Console | LOGGING | flags=log
Log Variables | LOGGING | flags=log
Comment | LOGGING | flags=log
No Operation | LOGGING
Should Be Equal | ASSERTION | expected=2
Should Not Be Equal | ASSERTION | expected=2
Should Be Equal As Strings | ASSERTION | expected=2
Should Be Equal As Integers | ASSERTION | expected=2
Should Be Equal As Numbers | ASSERTION | expected=2
Should Contain | ASSERTION | expected=2
Should Not Contain | ASSERTION | expected=2
Should Start With | ASSERTION | expected=2
Should End With | ASSERTION | expected=2
Should Match | ASSERTION | expected=2
Should Match Regexp | ASSERTION | expected=2
Should Be True | ASSERTION
Should Not Be True | ASSERTION
Should Be Empty | ASSERTION
Should Not Be Empty | ASSERTION
Length Should Be | ASSERTION | expected=2
Fail | ASSERTION
Evaluate | GETTER
Get Length | GETTER
Get Count | GETTER
Get Time | GETTER
Get Variable Value | GETTER
Set Variable | GETTER
Catenate | GETTER
Convert To Integer | GETTER
Convert To String | GETTER
Convert To Number | GETTER
Run Keyword | CONTROLFLOW
Run Keywords | CONTROLFLOW
Run Keyword If | CONTROLFLOW
Run Keyword Unless | CONTROLFLOW
Run Keyword And Ignore Error | CONTROLFLOW
Run Keyword And Expect Error | CONTROLFLOW
Repeat Keyword | CONTROLFLOW

# Operating system library
Get File | GETTER
Get Binary File | GETTER
Get Environment Variable | GETTER
Get File Size | GETTER
List Directory | GETTER
Run And Return Rc | GETTER
File Should Exist | ASSERTION
File Should Not Exist | ASSERTION
Directory Should Exist | ASSERTION
Create File | INTERACTION
Append To File | INTERACTION
Remove File | INTERACTION
Copy File | INTERACTION
Move File | INTERACTION
Create Directory | INTERACTION
Remove Directory | INTERACTION
Run | INTERACTION

# Selenium-style web driver keywords
Open Browser | INTERACTION | config=1,2
Create Webdriver | INTERACTION | config=1
Close Browser | INTERACTION
Close All Browsers | INTERACTION
Maximize Browser Window | INTERACTION
Set Window Size | INTERACTION | config=1,2
Switch Browser | INTERACTION | config=1
Switch Window | INTERACTION
Go To | INTERACTION
Go Back | INTERACTION
Reload Page | INTERACTION
Execute Javascript | INTERACTION
Click Element | INTERACTION | locators=1
Click Button | INTERACTION | locators=1
Click Link | INTERACTION | locators=1
Click Image | INTERACTION | locators=1
Double Click Element | INTERACTION | locators=1
Input Text | INTERACTION | locators=1
Input Password | INTERACTION | locators=1
Press Keys | INTERACTION | locators=1
Clear Element Text | INTERACTION | locators=1
Submit Form | INTERACTION | locators=1
Select From List By Value | INTERACTION | locators=1
Select From List By Label | INTERACTION | locators=1
Select Checkbox | INTERACTION | locators=1
Unselect Checkbox | INTERACTION | locators=1
Mouse Over | INTERACTION | locators=1
Scroll Element Into View | INTERACTION | locators=1
Drag And Drop | INTERACTION | locators=1,2
Choose File | INTERACTION | locators=1
Title Should Be | ASSERTION | expected=1
Location Should Be | ASSERTION | expected=1
Page Should Contain | ASSERTION | expected=1
Page Should Not Contain | ASSERTION | expected=1
Page Should Contain Element | ASSERTION | locators=1
Page Should Not Contain Element | ASSERTION | locators=1
Element Should Be Visible | ASSERTION | locators=1
Element Should Not Be Visible | ASSERTION | locators=1
Element Should Be Enabled | ASSERTION | locators=1
Element Should Be Disabled | ASSERTION | locators=1
Element Text Should Be | ASSERTION | locators=1 | expected=2
Element Attribute Value Should Be | ASSERTION | locators=1 | expected=3
Checkbox Should Be Selected | ASSERTION | locators=1
Checkbox Should Not Be Selected | ASSERTION | locators=1
List Selection Should Be | ASSERTION | locators=1 | expected=2
Textfield Value Should Be | ASSERTION | locators=1 | expected=2
Get Text | GETTER | locators=1
Get Value | GETTER | locators=1
Get Title | GETTER
Get Location | GETTER
Get Element Count | GETTER | locators=1
Get Element Attribute | GETTER | locators=1
Get WebElement | GETTER | locators=1
Get WebElements | GETTER | locators=1
Capture Page Screenshot | LOGGING | flags=log
Wait Until Page Contains | SYNC | expected=1
Wait Until Page Does Not Contain | SYNC | expected=1
Wait Until Page Contains Element | SYNC | locators=1
Wait Until Page Does Not Contain Element | SYNC | locators=1
Wait Until Element Is Visible | SYNC | locators=1
Wait Until Element Is Not Visible | SYNC | locators=1
Wait Until Element Is Enabled | SYNC | locators=1
Wait Until Element Contains | SYNC | locators=1 | expected=2
Wait For Condition | SYNC
)";

std::optional<EntryFlag> flag_from_name(std::string_view name) {
    if (name == "configuration") return EntryFlag::configuration;
    if (name == "action") return EntryFlag::action;
    if (name == "sleep") return EntryFlag::sleep;
    if (name == "log") return EntryFlag::log;
    return std::nullopt;
}

int parse_ordinal(const std::string& text, const std::string& origin, int line_no) {
    try {
        std::size_t idx = 0;
        int v = std::stoi(text, &idx);
        if (idx != text.size() || v < 1) throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(origin + ":" + std::to_string(line_no) +
                          ": bad ordinal '" + text + "' (expected integer >= 1)");
    }
}

void validate_entry(const CatalogEntry& e, const std::string& origin, int line_no) {
    auto fail = [&](const std::string& msg) {
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + msg);
    };
    if (e.has_flag(EntryFlag::sleep) && e.category != Category::sync)
        fail("'sleep' flag is only valid on SYNC entries");
    if (e.has_flag(EntryFlag::log) && e.category != Category::logging)
        fail("'log' flag is only valid on LOGGING entries");
}

}  // namespace

const char* category_name(Category c) {
    switch (c) {
        case Category::interaction: return "INTERACTION";
        case Category::assertion: return "ASSERTION";
        case Category::controlflow: return "CONTROLFLOW";
        case Category::getter: return "GETTER";
        case Category::logging: return "LOGGING";
        case Category::sync: return "SYNC";
    }
    return "?";
}

std::optional<Category> category_from_name(std::string_view name) {
    std::string n = to_lower(name);
    if (n == "interaction") return Category::interaction;
    if (n == "assertion") return Category::assertion;
    if (n == "controlflow") return Category::controlflow;
    if (n == "getter") return Category::getter;
    if (n == "logging") return Category::logging;
    if (n == "sync") return Category::sync;
    return std::nullopt;
}

const CatalogEntry* KeywordCatalog::find(std::string_view name) const {
    auto it = entries_.find(normalize_keyword_name(name));
    return it == entries_.end() ? nullptr : &it->second;
}

void KeywordCatalog::add(CatalogEntry entry) {
    entries_[normalize_keyword_name(entry.name)] = std::move(entry);
}

KeywordCatalog parse_catalog(std::string_view text, const std::string& origin) {
    KeywordCatalog catalog;
    int line_no = 0;
    for (const std::string& raw : split(std::string(text), '\n')) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> fields = split(line, '|');
        if (fields.size() < 2)
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected 'name | CATEGORY | ...'");

        CatalogEntry e;
        e.name = trim(fields[0]);
        if (e.name.empty())
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty keyword name");
        auto cat = category_from_name(trim(fields[1]));
        if (!cat)
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": unknown category '" +
                              trim(fields[1]) + "'");
        e.category = *cat;

        bool explicit_flags = false;
        for (std::size_t i = 2; i < fields.size(); ++i) {
            std::string field = trim(fields[i]);
            if (field.empty()) continue;
            auto eq = field.find('=');
            if (eq == std::string::npos)
                throw ConfigError(origin + ":" + std::to_string(line_no) +
                                  ": expected key=value, got '" + field + "'");
            std::string key = to_lower(trim(field.substr(0, eq)));
            std::string value = trim(field.substr(eq + 1));
            if (key == "flags") {
                explicit_flags = true;
                for (const std::string& f : split(value, ',')) {
                    std::string fname = to_lower(trim(f));
                    if (fname.empty()) continue;
                    auto flag = flag_from_name(fname);
                    if (!flag)
                        throw ConfigError(origin + ":" + std::to_string(line_no) +
                                          ": unknown flag '" + fname + "'");
                    e.flags.insert(*flag);
                }
            } else if (key == "expected") {
                e.expected_arg_index = parse_ordinal(value, origin, line_no);
            } else if (key == "locators") {
                for (const std::string& v : split(value, ','))
                    e.locator_arg_indices.insert(parse_ordinal(trim(v), origin, line_no));
            } else if (key == "config") {
                for (const std::string& v : split(value, ','))
                    e.config_arg_indices.insert(parse_ordinal(trim(v), origin, line_no));
            } else {
                throw ConfigError(origin + ":" + std::to_string(line_no) + ": unknown field '" +
                                  key + "'");
            }
        }
        // Implicit flags when none were spelled out.
        if (!explicit_flags) {
            if (e.category == Category::interaction) e.flags.insert(EntryFlag::action);
            if (!e.config_arg_indices.empty()) e.flags.insert(EntryFlag::configuration);
        }
        validate_entry(e, origin, line_no);
        catalog.add(std::move(e));
    }
    return catalog;
}

KeywordCatalog default_catalog() {
    static const KeywordCatalog cached = parse_catalog(kDefaultCatalog, "<builtin>");
    return cached;
}

KeywordCatalog load_catalog(const std::string& override_path) {
    KeywordCatalog catalog = default_catalog();
    if (override_path.empty()) return catalog;
    std::ifstream in(override_path, std::ios::binary);
    if (!in) throw ConfigError("cannot read catalog file: " + override_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    KeywordCatalog overrides = parse_catalog(buf.str(), override_path);
    for (const auto& [key, entry] : overrides.entries()) catalog.add(entry);
    return catalog;
}

std::string default_catalog_text() { return kDefaultCatalog; }

}  // namespace suitlint
