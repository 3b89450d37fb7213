#include <doctest.h>

#include <random>
#include "suitlint/refactoring.hpp"
#include "support/fixtures.hpp"

using namespace suitlint;
using namespace suitlint::testsupport;

TEST_CASE("each pattern fixture replays to exactly one action of its smell") {
    for (const ReplayCase& c : replay_cases()) {
        CAPTURE(c.name);
        auto actions = replay_actions(c.before, c.after);
        REQUIRE(actions.size() == 1);
        CHECK(actions[0].smell == c.smell);
        CHECK_FALSE(actions[0].tests.empty());
    }
}

TEST_CASE("replay covers all sixteen smells") {
    std::set<SmellId> covered;
    for (const ReplayCase& c : replay_cases()) covered.insert(c.smell);
    CHECK(covered.size() == 16);
}

TEST_CASE("deleting a whole symptomatic test yields zero actions") {
    ReplayCase c = whole_test_deletion_case();
    CHECK(replay_actions(c.before, c.after).empty());
}

TEST_CASE("sleep replaced by proper synchronization is one SS action") {
    auto actions = replay_actions({{"a.robot",
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
                                    "    Wait Until Page Contains    Welcome\n"
                                    "    Title Should Be    Welcome\n"}});
    REQUIRE(actions.size() == 1);
    CHECK(actions[0].smell == SmellId::SS);
}

TEST_CASE("removing the parent of a setup getter is not a fix") {
    // the setup stops calling the keyword but the getter statement lives on
    auto actions = replay_actions({{"a.robot",
                                    "*** Test Cases ***\n"
                                    "T\n"
                                    "    [Setup]    Prepare Data\n"
                                    "    Title Should Be    Welcome\n"
                                    "*** Keywords ***\n"
                                    "Prepare Data\n"
                                    "    Get File    data.csv\n"
                                    "    Create File    out.txt\n"}},
                                  {{"a.robot",
                                    "*** Test Cases ***\n"
                                    "T\n"
                                    "    Title Should Be    Welcome\n"
                                    "*** Keywords ***\n"
                                    "Prepare Data\n"
                                    "    Get File    data.csv\n"
                                    "    Create File    out.txt\n"}});
    CHECK(actions.empty());
}

TEST_CASE("removing an assertion does not count as a Missing Assertion fix") {
    auto actions = replay_actions({{"a.robot",
                                    "*** Test Cases ***\n"
                                    "T\n"
                                    "    Do Checks\n"
                                    "*** Keywords ***\n"
                                    "Do Checks\n"
                                    "    Click Button    ok\n"
                                    "    Title Should Be    A\n"}},
                                  {{"a.robot",
                                    "*** Test Cases ***\n"
                                    "T\n"
                                    "    Do Checks\n"
                                    "*** Keywords ***\n"
                                    "Do Checks\n"
                                    "    Click Button    ok\n"}});
    // the assertion removal is an OC action, never an MA one
    REQUIRE(actions.size() == 1);
    CHECK(actions[0].smell == SmellId::OC);
}

TEST_CASE("rates follow the action-over-symptom accounting") {
    // symptom present in three versions, fixed in the fourth
    std::vector<std::pair<std::string, std::string>> with_sleep = {
        {"a.robot",
         "*** Test Cases ***\n"
         "T\n"
         "    Do Flow\n"
         "*** Keywords ***\n"
         "Do Flow\n"
         "    Click Button    ok\n"
         "    Sleep    5s\n"
         "    Title Should Be    Welcome\n"}};
    std::vector<std::pair<std::string, std::string>> without_sleep = {
        {"a.robot",
         "*** Test Cases ***\n"
         "T\n"
         "    Do Flow\n"
         "*** Keywords ***\n"
         "Do Flow\n"
         "    Click Button    ok\n"
         "    Title Should Be    Welcome\n"}};

    DetectorConfig config;
    std::vector<Snapshot> snaps;
    snaps.push_back(parse_snapshot(with_sleep, "v1"));
    snaps.push_back(parse_snapshot(with_sleep, "v2"));
    snaps.push_back(parse_snapshot(with_sleep, "v3"));
    snaps.push_back(parse_snapshot(without_sleep, "v4"));

    std::vector<VersionFindings> findings;
    for (const Snapshot& s : snaps) findings.push_back(findings_of(s, config));

    std::vector<RefactoringAction> actions;
    for (std::size_t i = 0; i + 1 < snaps.size(); ++i) {
        auto changes = diff_snapshots(snaps[i], snaps[i + 1]);
        auto pair = match_refactorings(snaps[i], snaps[i + 1], findings[i], findings[i + 1],
                                       changes, config);
        actions.insert(actions.end(), pair.begin(), pair.end());
    }
    REQUIRE(actions.size() == 1);
    CHECK(actions[0].smell == SmellId::SS);

    auto rates = refactoring_rates(findings, actions);
    const SmellRates* ss = nullptr;
    for (const auto& r : rates)
        if (r.smell == SmellId::SS) ss = &r;
    REQUIRE(ss != nullptr);
    CHECK(ss->action_count == 1);
    CHECK(ss->symptom_nodes == 3);
    CHECK(ss->rate == doctest::Approx(1.0 / 3.0));
    CHECK(ss->tests_symptomatic == 1);
    CHECK(ss->tests_refactored == 1);
    CHECK(ss->percent_refactored == doctest::Approx(100.0));
}

TEST_CASE("zero actions mean zero rates everywhere") {
    auto files = std::vector<std::pair<std::string, std::string>>{
        {"a.robot",
         "*** Test Cases ***\n"
         "T\n"
         "    Sleep    1s\n"}};
    DetectorConfig config;
    Snapshot s1 = parse_snapshot(files, "v1");
    Snapshot s2 = parse_snapshot(files, "v2");
    std::vector<VersionFindings> findings{findings_of(s1, config), findings_of(s2, config)};
    auto rates = refactoring_rates(findings, {});
    for (const auto& r : rates) {
        CHECK(r.action_count == 0);
        CHECK(r.rate == doctest::Approx(0.0));
        CHECK(r.tests_refactored == 0);
    }
}

TEST_CASE("action soundness: the symptom is gone at the location afterwards") {
    for (const ReplayCase& c : replay_cases()) {
        CAPTURE(c.name);
        Snapshot v2 = parse_snapshot(c.after, "v2");
        VersionFindings f2 = findings_of(v2, {});
        auto actions = replay_actions(c.before, c.after);
        REQUIRE(actions.size() == 1);
        for (const std::string& test : actions[0].tests) {
            const SmellFinding* finding = f2.find(test, c.smell);
            if (!finding) continue;
            for (const NodeLoc& node : actions[0].nodes)
                CHECK(finding->occurrence_keys.count(node.key()) == 0);
        }
    }
}

namespace {

// Small random suite generator for mutation-based property checks.
std::string random_suite(std::mt19937& rng) {
    auto pick = [&](int n) { return static_cast<int>(rng() % n); };
    const char* body_calls[] = {
        "Click Button    ok",
        "Input Text    field    secret",
        "Sleep    2s",
        "Title Should Be    Welcome",
        "Get File    data.csv",
        "Log    note",
        "Wait Until Page Contains    x",
        "Click Element    /html/body/div/span/button",
        "Should Be Equal    ${a}    42",
    };
    std::string content = "*** Test Cases ***\n";
    int tests = 1 + pick(2);
    for (int t = 0; t < tests; ++t) {
        content += "Case " + std::to_string(t) + "\n";
        if (pick(3) == 0) content += "    [Setup]    Helper " + std::to_string(pick(2)) + "\n";
        int steps = 1 + pick(4);
        for (int s = 0; s < steps; ++s) {
            if (pick(4) == 0) content += "    Helper " + std::to_string(pick(2)) + "\n";
            else content += "    " + std::string(body_calls[pick(9)]) + "\n";
        }
    }
    content += "*** Keywords ***\n";
    for (int k = 0; k < 2; ++k) {
        content += "Helper " + std::to_string(k) + "\n";
        int stmts = 1 + pick(3);
        for (int s = 0; s < stmts; ++s) content += "    " + std::string(body_calls[pick(9)]) + "\n";
    }
    return content;
}

// Random line-level edit: drop, duplicate or retarget one statement line.
std::string mutate(const std::string& content, std::mt19937& rng) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : content) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::vector<std::size_t> editable;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].rfind("    ", 0) == 0) editable.push_back(i);
    if (editable.empty()) return content;
    std::size_t target = editable[rng() % editable.size()];
    switch (rng() % 3) {
        case 0: lines.erase(lines.begin() + static_cast<long>(target)); break;
        case 1: lines.insert(lines.begin() + static_cast<long>(target), lines[target]); break;
        default: lines[target] = "    Log    replaced"; break;
    }
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

}  // namespace

TEST_CASE("random edits: matching is total and every action is sound") {
    std::mt19937 rng(777);
    DetectorConfig config;
    for (int round = 0; round < 60; ++round) {
        std::string before = random_suite(rng);
        std::string after = mutate(mutate(before, rng), rng);

        Snapshot v1 = parse_snapshot({{"a.robot", before}}, "v1");
        Snapshot v2 = parse_snapshot({{"a.robot", after}}, "v2");
        VersionFindings f1 = findings_of(v1, config);
        VersionFindings f2 = findings_of(v2, config);

        // diff is empty on identity regardless of content
        CHECK(diff_snapshots(v1, v1).empty());

        auto changes = diff_snapshots(v1, v2);
        auto actions = match_refactorings(v1, v2, f1, f2, changes, config);
        for (const RefactoringAction& a : actions) {
            CHECK_FALSE(a.tests.empty());
            // soundness: in v1 the node was symptomatic for the credited tests
            for (const std::string& t : a.tests) {
                const SmellFinding* before_f = f1.find(t, a.smell);
                REQUIRE(before_f != nullptr);
                CHECK(before_f->count >= 1);
            }
        }

        auto rates = refactoring_rates({f1, f2}, actions);
        for (const SmellRates& r : rates) {
            CHECK(r.rate >= 0.0);
            CHECK(r.percent_refactored >= 0.0);
            CHECK(r.percent_refactored <= 100.0);
            CHECK(r.tests_refactored <= r.tests_symptomatic);
        }
    }
}
