#include "support/fixtures.hpp"

#include <stdexcept>

#include "suitlint/clones.hpp"
#include "suitlint/diff.hpp"
#include "suitlint/parser.hpp"

namespace suitlint::testsupport {

Snapshot parse_snapshot(const std::vector<std::pair<std::string, std::string>>& files,
                        const std::string& version) {
    std::vector<std::shared_ptr<SuiteAst>> asts;
    for (const auto& [path, content] : files) {
        SourceFile f(path, content);
        asts.push_back(std::make_shared<SuiteAst>(parse_file(f)));
    }
    return build_snapshot(std::move(asts), default_catalog(), version);
}

VersionFindings findings_of(const Snapshot& snapshot, const DetectorConfig& config) {
    VersionFindings out;
    out.version_id = snapshot.version_id;
    CloneIndex clones = find_clones(snapshot);
    for (const auto& tree : snapshot.tests)
        out.by_test[tree->test_id.key()] = detect_all(*tree, clones, config);
    return out;
}

const SmellFinding& finding(const VersionFindings& findings, const std::string& test_key,
                            SmellId smell) {
    const SmellFinding* f = findings.find(test_key, smell);
    if (!f) throw std::runtime_error("no finding for test key: " + test_key);
    return *f;
}

const CallTree& only_test(const Snapshot& snapshot) {
    if (snapshot.tests.empty()) throw std::runtime_error("snapshot has no tests");
    return *snapshot.tests.front();
}

const SmellFinding& detect_one(const Snapshot& snapshot, SmellId smell,
                               const DetectorConfig& config) {
    static VersionFindings cache;
    cache = findings_of(snapshot, config);
    return finding(cache, only_test(snapshot).test_id.key(), smell);
}

std::vector<RefactoringAction> replay_actions(
    const std::vector<std::pair<std::string, std::string>>& before,
    const std::vector<std::pair<std::string, std::string>>& after,
    const DetectorConfig& config) {
    Snapshot v1 = parse_snapshot(before, "v1");
    Snapshot v2 = parse_snapshot(after, "v2");
    VersionFindings f1 = findings_of(v1, config);
    VersionFindings f2 = findings_of(v2, config);
    std::vector<FineGrainedChange> changes = diff_snapshots(v1, v2);
    return match_refactorings(v1, v2, f1, f2, changes, config);
}

std::string data_file(const std::string& name) {
    return std::string(SUITLINT_TEST_DATA_DIR) + "/" + name;
}

namespace {

using Files = std::vector<std::pair<std::string, std::string>>;

ReplayCase make_case(SmellId smell, std::string name, Files before, Files after) {
    ReplayCase c;
    c.smell = smell;
    c.name = std::move(name);
    c.before = std::move(before);
    c.after = std::move(after);
    return c;
}

std::string long_keyword(int actions) {
    std::string body = "Big Step\n";
    for (int i = 0; i < actions; ++i)
        body += "    Click Button    b" + std::to_string(i) + "\n";
    return body;
}

}  // namespace

std::vector<ReplayCase> replay_cases() {
    std::vector<ReplayCase> cases;

    cases.push_back(make_case(
        SmellId::AoC, "cloned keyword removed",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Duplicated One\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Duplicated One\n"
          "    Click Button    ok\n"
          "    Input Text    f    v\n"
          "Duplicated Two\n"
          "    Click Button    ok\n"
          "    Input Text    f    v\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Duplicated Two\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Duplicated Two\n"
          "    Click Button    ok\n"
          "    Input Text    f    v\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}}));

    cases.push_back(make_case(
        SmellId::CA, "assertion replaces its conditional parent",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Act And Check\n"
          "*** Keywords ***\n"
          "Act And Check\n"
          "    Click Button    ok\n"
          "    IF    ${cond}\n"
          "        Title Should Be    Welcome\n"
          "    END\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Act And Check\n"
          "*** Keywords ***\n"
          "Act And Check\n"
          "    Click Button    ok\n"
          "    Title Should Be    Welcome\n"}}));

    cases.push_back(make_case(
        SmellId::HE, "hardcoded browser becomes a variable",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    [Setup]    Open Browser    http://x    chrome\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    [Setup]    Open Browser    http://x    ${BROWSER}\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"
          "*** Variables ***\n"
          "${BROWSER}    chrome\n"}}));

    cases.push_back(make_case(
        SmellId::HTD, "getter removed from the setup",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    [Setup]    Prepare Data\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Prepare Data\n"
          "    Get File    data.csv\n"
          "    Create File    out.txt\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    [Setup]    Prepare Data\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Prepare Data\n"
          "    Create File    out.txt\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}}));

    cases.push_back(make_case(
        SmellId::LoE, "driver step replaced by a user keyword",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Input Text    user_field    admin\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Type Into    user_field    admin\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Type Into\n"
          "    [Arguments]    ${field}    ${value}\n"
          "    Input Text    ${field}    ${value}\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}}));

    cases.push_back(make_case(
        SmellId::LTS, "step drops below the action threshold",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Big Step\n"
          "    Welcome Check\n"
          "*** Keywords ***\n" +
              long_keyword(13) +
              "Welcome Check\n"
              "    Title Should Be    Welcome\n"
              "    Log    checked\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Big Step\n"
          "    Welcome Check\n"
          "*** Keywords ***\n" +
              long_keyword(12) +
              "Welcome Check\n"
              "    Title Should Be    Welcome\n"
              "    Log    checked\n"}}));

    cases.push_back(make_case(
        SmellId::MA, "assertion introduced into an assertion-less test",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Click Button    ok\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Click Button    ok\n"
          "    Title Should Be    Welcome\n"}}));

    cases.push_back(make_case(
        SmellId::MM, "delegate call retargeted to the real keyword",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Do The Thing\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Do The Thing\n"
          "    Real Work\n"
          "Real Work\n"
          "    Click Button    ok\n"
          "    Input Text    f    v\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Real Work\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Do The Thing\n"
          "    Real Work\n"
          "Real Work\n"
          "    Click Button    ok\n"
          "    Input Text    f    v\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}}));

    cases.push_back(make_case(
        SmellId::N, "pronoun step renamed away",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    When I submit the form\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "I submit the form\n"
          "    Click Button    submit\n"
          "    Input Text    f    v\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    When user submits the form\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "user submits the form\n"
          "    Click Button    submit\n"
          "    Input Text    f    v\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}}));

    cases.push_back(make_case(
        SmellId::NL, "log call removed from the setup",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    [Setup]    Prepare\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Prepare\n"
          "    Log    starting\n"
          "    Create File    x.txt\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    [Setup]    Prepare\n"
          "    Welcome Check\n"
          "*** Keywords ***\n"
          "Prepare\n"
          "    Create File    x.txt\n"
          "Welcome Check\n"
          "    Title Should Be    Welcome\n"
          "    Log    checked\n"}}));

    cases.push_back(make_case(
        SmellId::OC, "assertion call removed",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Do Checks\n"
          "*** Keywords ***\n"
          "Do Checks\n"
          "    Click Button    ok\n"
          "    Title Should Be    A\n"
          "    Title Should Be    B\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Do Checks\n"
          "*** Keywords ***\n"
          "Do Checks\n"
          "    Click Button    ok\n"
          "    Title Should Be    A\n"}}));

    cases.push_back(make_case(
        SmellId::OT, "hardcoded argument becomes a variable",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Fill Password\n"
          "*** Keywords ***\n"
          "Fill Password\n"
          "    Input Text    pw_field    secret\n"
          "    Title Should Be    Welcome\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Fill Password\n"
          "*** Keywords ***\n"
          "Fill Password\n"
          "    Input Text    pw_field    ${PASS}\n"
          "    Title Should Be    Welcome\n"
          "*** Variables ***\n"
          "${PASS}    secret\n"}}));

    cases.push_back(make_case(
        SmellId::OtF, "expected value no longer computed on the fly",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    ${x}=    Get Text    field_id\n"
          "    Should Be Equal    ${y}    ${x}\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    ${x}=    Get Text    field_id\n"
          "    Should Be Equal    ${y}    42\n"}}));

    cases.push_back(make_case(
        SmellId::SC, "assertion-only keyword removed",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Click Button    ok\n"
          "    Page Looks Right\n"
          "*** Keywords ***\n"
          "Page Looks Right\n"
          "    Title Should Be    Welcome\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Click Button    ok\n"}}));

    cases.push_back(make_case(
        SmellId::SL, "locator chain shortened to one element",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Do Click\n"
          "*** Keywords ***\n"
          "Do Click\n"
          "    Click Element    /html/body/div[4]/button\n"
          "    Title Should Be    Welcome\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Do Click\n"
          "*** Keywords ***\n"
          "Do Click\n"
          "    Click Element    //button[@id=\"login\"]\n"
          "    Title Should Be    Welcome\n"}}));

    cases.push_back(make_case(
        SmellId::SS, "sleep removed from the flow",
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Do Flow\n"
          "*** Keywords ***\n"
          "Do Flow\n"
          "    Click Button    ok\n"
          "    Sleep    5s\n"
          "    Title Should Be    Welcome\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "T\n"
          "    Do Flow\n"
          "*** Keywords ***\n"
          "Do Flow\n"
          "    Click Button    ok\n"
          "    Title Should Be    Welcome\n"}}));

    return cases;
}

ReplayCase whole_test_deletion_case() {
    return make_case(
        SmellId::SS, "whole symptomatic test deleted",
        {{"a.robot",
          "*** Test Cases ***\n"
          "Keeper\n"
          "    Click Button    ok\n"
          "    Title Should Be    A\n"
          "Doomed\n"
          "    Sleep    5s\n"
          "    Click Button    x\n"}},
        {{"a.robot",
          "*** Test Cases ***\n"
          "Keeper\n"
          "    Click Button    ok\n"
          "    Title Should Be    A\n"}});
}

}  // namespace suitlint::testsupport
