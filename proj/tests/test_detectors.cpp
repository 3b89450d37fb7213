#include <doctest.h>

#include <random>

#include "suitlint/clones.hpp"
#include "suitlint/parser.hpp"
#include "suitlint/smells.hpp"
#include "support/fixtures.hpp"

using namespace suitlint;
using testsupport::detect_one;
using testsupport::parse_snapshot;

namespace {

Snapshot login_demo() {
    SourceFile f = SourceFile::load(testsupport::data_file("login_demo.robot"), "login_demo.robot");
    std::vector<std::shared_ptr<SuiteAst>> asts{std::make_shared<SuiteAst>(parse_file(f))};
    return build_snapshot(std::move(asts), default_catalog(), "v1");
}

}  // namespace

TEST_CASE("AoC counts called keywords with clones elsewhere in the suite") {
    Snapshot snap = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Do Work\n"
                                     "*** Keywords ***\n"
                                     "Do Work\n"
                                     "    Click Button    ok\n"
                                     "    Log    done\n"},
                                    {"b.robot",
                                     "*** Keywords ***\n"
                                     "Other Work\n"
                                     "    Click Button    ok\n"
                                     "    Log    done\n"}});
    const SmellFinding& f = detect_one(snap, SmellId::AoC);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);

    Snapshot no_kw = parse_snapshot({{"a.robot",
                                      "*** Test Cases ***\n"
                                      "T\n"
                                      "    Click Button    ok\n"}});
    const SmellFinding& empty = detect_one(no_kw, SmellId::AoC);
    CHECK(empty.count == 0);
    CHECK(empty.density_absent());

    const SmellFinding& fig = detect_one(login_demo(), SmellId::AoC);
    CHECK(fig.count == 0);
    CHECK(fig.denominator == 7);
}

TEST_CASE("CA flags lone assertions under a conditional") {
    Snapshot lone = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    IF    ${cond}\n"
                                     "        Should Be Equal    ${a}    1\n"
                                     "    END\n"}});
    const SmellFinding& f = detect_one(lone, SmellId::CA);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);

    Snapshot sibling = parse_snapshot({{"a.robot",
                                        "*** Test Cases ***\n"
                                        "T\n"
                                        "    IF    ${cond}\n"
                                        "        Click Button    ok\n"
                                        "        Should Be Equal    ${a}    1\n"
                                        "    END\n"}});
    CHECK(detect_one(sibling, SmellId::CA).count == 0);

    // a logging sibling does not shield the assertion
    Snapshot logged = parse_snapshot({{"a.robot",
                                       "*** Test Cases ***\n"
                                       "T\n"
                                       "    IF    ${cond}\n"
                                       "        Log    checking\n"
                                       "        Should Be Equal    ${a}    1\n"
                                       "    END\n"}});
    CHECK(detect_one(logged, SmellId::CA).count == 1);

    const SmellFinding& fig = detect_one(login_demo(), SmellId::CA);
    CHECK(fig.count == 0);
    CHECK(fig.denominator == 2);
}

TEST_CASE("HE counts hardcoded configuration arguments over all of them") {
    Snapshot hard = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Open Browser    http://x    Chrome\n"}});
    const SmellFinding& f = detect_one(hard, SmellId::HE);
    CHECK(f.count == 2);
    CHECK(f.denominator == 2);
    CHECK(f.density() == doctest::Approx(1.0));

    const SmellFinding& fig = detect_one(login_demo(), SmellId::HE);
    CHECK(fig.count == 0);
    CHECK(fig.denominator == 2);

    Snapshot none = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Click Button    ok\n"}});
    CHECK(detect_one(none, SmellId::HE).density_absent());
}

TEST_CASE("HE sees configuration arguments in fixtures") {
    Snapshot snap = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    [Setup]    Open Browser    http://x    chrome\n"
                                     "    Click Button    ok\n"}});
    const SmellFinding& f = detect_one(snap, SmellId::HE);
    CHECK(f.count == 2);
    CHECK(f.denominator == 2);
    // while OT, a body metric, ignores them
    CHECK(detect_one(snap, SmellId::OT).count == 1);
}

TEST_CASE("HTD counts getters in the setup subtree") {
    Snapshot getter = parse_snapshot({{"a.robot",
                                       "*** Test Cases ***\n"
                                       "T\n"
                                       "    [Setup]    Get File    data.csv\n"
                                       "    Click Button    ok\n"}});
    const SmellFinding& f = detect_one(getter, SmellId::HTD);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);

    Snapshot no_setup = parse_snapshot({{"a.robot",
                                         "*** Test Cases ***\n"
                                         "T\n"
                                         "    Click Button    ok\n"}});
    CHECK(detect_one(no_setup, SmellId::HTD).density_absent());

    Snapshot interactions = parse_snapshot({{"a.robot",
                                             "*** Test Cases ***\n"
                                             "T\n"
                                             "    [Setup]    Prepare\n"
                                             "    Click Button    ok\n"
                                             "*** Keywords ***\n"
                                             "Prepare\n"
                                             "    Click Button    a\n"
                                             "    Input Text    b    c\n"}});
    const SmellFinding& zero = detect_one(interactions, SmellId::HTD);
    CHECK(zero.count == 0);
    CHECK(zero.denominator == 2);
    CHECK(zero.density() == doctest::Approx(0.0));
}

TEST_CASE("LoE flags steps that call the driver directly") {
    const SmellFinding& fig = detect_one(login_demo(), SmellId::LoE);
    CHECK(fig.count == 0);
    CHECK(fig.denominator == 3);

    Snapshot driver = parse_snapshot({{"a.robot",
                                       "*** Test Cases ***\n"
                                       "T\n"
                                       "    Click Button    ok\n"}});
    const SmellFinding& f = detect_one(driver, SmellId::LoE);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);

    Snapshot no_steps = parse_snapshot({{"a.robot",
                                         "*** Test Cases ***\n"
                                         "T\n"
                                         "    [Setup]    Log    only fixtures\n"}});
    CHECK(detect_one(no_steps, SmellId::LoE).density_absent());
}

TEST_CASE("LTS compares transitive action counts against the threshold") {
    // a step expanding to exactly 13 interaction leaves is symptomatic at L=13
    std::string body;
    for (int i = 0; i < 13; ++i) body += "    Click Button    b" + std::to_string(i) + "\n";
    Snapshot snap = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Big Step\n"
                                     "*** Keywords ***\n"
                                     "Big Step\n" +
                                         body}});
    DetectorConfig config;
    const SmellFinding& f = detect_one(snap, SmellId::LTS, config);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);

    // Fig. 1 step 2 yields three action leaves: not symptomatic at 13
    const SmellFinding& fig = detect_one(login_demo(), SmellId::LTS);
    CHECK(fig.count == 0);
    CHECK(fig.denominator == 3);

    // degenerate threshold: every step with at least one action is long
    DetectorConfig l1;
    l1.long_step_threshold = 1;
    const SmellFinding& all = detect_one(login_demo(), SmellId::LTS, l1);
    CHECK(all.count == 2);  // step 3 has no action leaf
}

TEST_CASE("MA is one exactly when no assertion is reachable") {
    CHECK(detect_one(login_demo(), SmellId::MA).count == 0);

    Snapshot no_assert = parse_snapshot({{"a.robot",
                                          "*** Test Cases ***\n"
                                          "T\n"
                                          "    Click Button    ok\n"
                                          "    Input Text    f    v\n"}});
    const SmellFinding& f = detect_one(no_assert, SmellId::MA);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);
    CHECK(f.density() == doctest::Approx(1.0));

    Snapshot empty = parse_snapshot({{"a.robot",
                                      "*** Test Cases ***\n"
                                      "T\n"
                                      "    [Documentation]    nothing to do\n"}});
    CHECK(detect_one(empty, SmellId::MA).count == 1);
}

TEST_CASE("MM flags keywords that only forward to another user keyword") {
    const SmellFinding& fig = detect_one(login_demo(), SmellId::MM);
    CHECK(fig.count == 1);
    CHECK(fig.denominator == 7);
    REQUIRE(fig.nodes.size() == 1);
    CHECK(fig.nodes[0].owner == "browserisopenedtologinpage");

    // delegating to a library keyword is not Middle Man
    Snapshot lib = parse_snapshot({{"a.robot",
                                    "*** Test Cases ***\n"
                                    "T\n"
                                    "    Wrapper\n"
                                    "*** Keywords ***\n"
                                    "Wrapper\n"
                                    "    Click Button    ok\n"}});
    CHECK(detect_one(lib, SmellId::MM).count == 0);

    Snapshot none = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Click Button    ok\n"}});
    CHECK(detect_one(none, SmellId::MM).density_absent());
}

TEST_CASE("N matches a leading first-person pronoun after BDD stripping") {
    Snapshot en = parse_snapshot({{"a.robot",
                                   "*** Test Cases ***\n"
                                   "T\n"
                                   "    When I log in\n"
                                   "*** Keywords ***\n"
                                   "I log in\n"
                                   "    Click Button    ok\n"}});
    CHECK(detect_one(en, SmellId::N).count == 1);

    CHECK(detect_one(login_demo(), SmellId::N).count == 0);

    Snapshot fr = parse_snapshot({{"a.robot",
                                   "*** Test Cases ***\n"
                                   "T\n"
                                   "    Je valide le formulaire\n"
                                   "*** Keywords ***\n"
                                   "Je valide le formulaire\n"
                                   "    Click Button    ok\n"}});
    CHECK(detect_one(fr, SmellId::N).count == 1);

    Snapshot fr_apostrophe = parse_snapshot({{"a.robot",
                                              "*** Test Cases ***\n"
                                              "T\n"
                                              "    J'ouvre la page\n"
                                              "*** Keywords ***\n"
                                              "J'ouvre la page\n"
                                              "    Click Button    ok\n"}});
    CHECK(detect_one(fr_apostrophe, SmellId::N).count == 1);

    // "I" must be the subject token, not a substring
    Snapshot inner = parse_snapshot({{"a.robot",
                                      "*** Test Cases ***\n"
                                      "T\n"
                                      "    Items are listed\n"
                                      "*** Keywords ***\n"
                                      "Items are listed\n"
                                      "    Click Button    ok\n"}});
    CHECK(detect_one(inner, SmellId::N).count == 0);
}

TEST_CASE("NL counts logging calls in the setup") {
    Snapshot log_only = parse_snapshot({{"a.robot",
                                         "*** Test Cases ***\n"
                                         "T\n"
                                         "    [Setup]    Log    starting\n"
                                         "    Click Button    ok\n"}});
    const SmellFinding& f = detect_one(log_only, SmellId::NL);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);

    Snapshot none = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Click Button    ok\n"}});
    CHECK(detect_one(none, SmellId::NL).density_absent());

    Snapshot third = parse_snapshot({{"a.robot",
                                      "*** Test Cases ***\n"
                                      "T\n"
                                      "    [Setup]    Prepare\n"
                                      "    Click Button    ok\n"
                                      "*** Keywords ***\n"
                                      "Prepare\n"
                                      "    Click Button    a\n"
                                      "    Log    state\n"
                                      "    Input Text    b    c\n"}});
    const SmellFinding& ratio = detect_one(third, SmellId::NL);
    CHECK(ratio.count == 1);
    CHECK(ratio.denominator == 3);
}

TEST_CASE("OC is the assertion share of all library calls in the body") {
    const SmellFinding& fig = detect_one(login_demo(), SmellId::OC);
    CHECK(fig.count == 2);
    CHECK(fig.denominator == 7);

    Snapshot assertions = parse_snapshot({{"a.robot",
                                           "*** Test Cases ***\n"
                                           "T\n"
                                           "    Title Should Be    X\n"
                                           "    Should Be Equal    ${a}    1\n"}});
    const SmellFinding& all = detect_one(assertions, SmellId::OC);
    CHECK(all.density() == doctest::Approx(1.0));

    Snapshot empty = parse_snapshot({{"a.robot",
                                      "*** Test Cases ***\n"
                                      "T\n"
                                      "    [Documentation]    nothing\n"}});
    CHECK(detect_one(empty, SmellId::OC).density_absent());
}

TEST_CASE("OT counts hardcoded argument entities over all of them") {
    const SmellFinding& fig = detect_one(login_demo(), SmellId::OT);
    CHECK(fig.count == 7);
    CHECK(fig.denominator == 11);

    Snapshot no_args = parse_snapshot({{"a.robot",
                                        "*** Test Cases ***\n"
                                        "T\n"
                                        "    Maximize Browser Window\n"}});
    CHECK(detect_one(no_args, SmellId::OT).density_absent());

    Snapshot vars_only = parse_snapshot({{"a.robot",
                                          "*** Test Cases ***\n"
                                          "T\n"
                                          "    Click Button    ${b}\n"
                                          "    Input Text    ${f}    ${v}\n"}});
    const SmellFinding& zero = detect_one(vars_only, SmellId::OT);
    CHECK(zero.count == 0);
    CHECK(zero.denominator == 3);
}

TEST_CASE("OtF flags expected arguments computed during the test") {
    Snapshot computed = parse_snapshot({{"a.robot",
                                         "*** Test Cases ***\n"
                                         "T\n"
                                         "    ${x}=    Get Text    id\n"
                                         "    Should Be Equal    ${y}    ${x}\n"}});
    const SmellFinding& f = detect_one(computed, SmellId::OtF);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);

    Snapshot literal = parse_snapshot({{"a.robot",
                                        "*** Test Cases ***\n"
                                        "T\n"
                                        "    Should Be Equal    ${y}    42\n"}});
    CHECK(detect_one(literal, SmellId::OtF).count == 0);

    Snapshot no_expected = parse_snapshot({{"a.robot",
                                            "*** Test Cases ***\n"
                                            "T\n"
                                            "    Click Button    ok\n"}});
    CHECK(detect_one(no_expected, SmellId::OtF).density_absent());

    // transitivity: a value derived from a computed variable stays computed
    Snapshot transitive = parse_snapshot({{"a.robot",
                                           "*** Test Cases ***\n"
                                           "T\n"
                                           "    ${x}=    Get Text    id\n"
                                           "    ${y}=    Set Variable    ${x}\n"
                                           "    Should Be Equal    ${z}    ${y}\n"}});
    CHECK(detect_one(transitive, SmellId::OtF).count == 1);
}

TEST_CASE("SC flags keywords wrapping a single assertion") {
    const SmellFinding& fig = detect_one(login_demo(), SmellId::SC);
    CHECK(fig.count == 1);
    CHECK(fig.denominator == 7);
    REQUIRE(fig.nodes.size() == 1);
    CHECK(fig.nodes[0].owner == "welcomepageshouldbeopen");

    Snapshot mixed = parse_snapshot({{"a.robot",
                                      "*** Test Cases ***\n"
                                      "T\n"
                                      "    Check And Click\n"
                                      "*** Keywords ***\n"
                                      "Check And Click\n"
                                      "    Title Should Be    X\n"
                                      "    Click Button    ok\n"}});
    CHECK(detect_one(mixed, SmellId::SC).count == 0);

    Snapshot none = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Click Button    ok\n"}});
    CHECK(detect_one(none, SmellId::SC).density_absent());
}

TEST_CASE("SL compares locator complexity of every resolvable value") {
    Snapshot deep = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Click Element    /html/body/div[4]/button\n"}});
    const SmellFinding& f = detect_one(deep, SmellId::SL);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);

    Snapshot shallow = parse_snapshot({{"a.robot",
                                        "*** Test Cases ***\n"
                                        "T\n"
                                        "    Click Element    //button[@id =\"unique-id\"]\n"}});
    CHECK(detect_one(shallow, SmellId::SL).count == 0);

    const SmellFinding& fig = detect_one(login_demo(), SmellId::SL);
    CHECK(fig.count == 0);
    CHECK(fig.denominator == 3);

    // an unresolvable locator stays out of the denominator
    Snapshot opaque = parse_snapshot({{"a.robot",
                                       "*** Test Cases ***\n"
                                       "T\n"
                                       "    Click Element    ${mystery}\n"}});
    CHECK(detect_one(opaque, SmellId::SL).density_absent());
}

TEST_CASE("SS is the sleep share of synchronization calls") {
    Snapshot sleep = parse_snapshot({{"a.robot",
                                      "*** Test Cases ***\n"
                                      "T\n"
                                      "    Sleep    5s\n"}});
    const SmellFinding& f = detect_one(sleep, SmellId::SS);
    CHECK(f.count == 1);
    CHECK(f.denominator == 1);

    Snapshot wait = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Wait Until Element Is Visible    x\n"}});
    const SmellFinding& zero = detect_one(wait, SmellId::SS);
    CHECK(zero.count == 0);
    CHECK(zero.denominator == 1);

    CHECK(detect_one(login_demo(), SmellId::SS).density_absent());
}

TEST_CASE("detect_all returns sixteen findings in stable order") {
    Snapshot snap = login_demo();
    CloneIndex clones = find_clones(snap);
    DetectorConfig config;
    auto findings = detect_all(*snap.tests[0], clones, config);
    REQUIRE(findings.size() == 16);
    for (std::size_t i = 0; i < findings.size(); ++i)
        CHECK(findings[i].smell == all_smells()[i]);

    // the empty test: MA fires, every other zero-denominator density absent
    Snapshot empty = parse_snapshot({{"a.robot",
                                      "*** Test Cases ***\n"
                                      "T\n"
                                      "    [Documentation]    nothing\n"}});
    CloneIndex no_clones = find_clones(empty);
    auto empty_findings = detect_all(*empty.tests[0], no_clones, config);
    REQUIRE(empty_findings.size() == 16);
    for (const SmellFinding& f : empty_findings) {
        if (f.smell == SmellId::MA) {
            CHECK(f.count == 1);
        } else {
            CHECK(f.count == 0);
            CHECK(f.density_absent());
        }
    }
}

TEST_CASE("finding invariants: bounded counts and consistent densities") {
    Snapshot snap = login_demo();
    CloneIndex clones = find_clones(snap);
    DetectorConfig config;
    for (const SmellFinding& f : detect_all(*snap.tests[0], clones, config)) {
        CHECK(f.count >= 0);
        if (f.denominator > 0) {
            CHECK(f.count <= f.denominator);
            CHECK(f.density() >= 0.0);
            CHECK(f.density() <= 1.0);
        } else {
            CHECK(f.count == 0);
        }
        if (f.smell != SmellId::MA)
            CHECK(static_cast<long long>(f.nodes.size()) == f.count);
    }
}

TEST_CASE("unresolved calls stay out of numerators and denominators") {
    Snapshot snap = parse_snapshot({{"a.robot",
                                     "*** Test Cases ***\n"
                                     "T\n"
                                     "    Unknown Step    x\n"
                                     "    Click Button    ok\n"}});
    const SmellFinding& loe = detect_one(snap, SmellId::LoE);
    CHECK(loe.denominator == 1);  // only the resolved step
    const SmellFinding& ot = detect_one(snap, SmellId::OT);
    CHECK(ot.denominator == 1);  // "x" is not counted
}

TEST_CASE("monotonicity: extra hardcoded arguments and assertions never lower counts") {
    std::mt19937 rng(99);
    const char* calls[] = {"Click Button    ${b%d}", "Input Text    f%d    ${v%d}",
                           "Log    note%d", "Title Should Be    ${t%d}",
                           "Get Text    ${loc%d}"};
    for (int round = 0; round < 20; ++round) {
        std::string body;
        int n = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i) {
            char line[128];
            std::snprintf(line, sizeof(line), calls[rng() % 5], i, i, i);
            body += "    " + std::string(line) + "\n";
        }
        std::string base = "*** Test Cases ***\nT\n" + body;
        Snapshot before = parse_snapshot({{"a.robot", base}});

        std::string extra_literal = base + "    Input Text    brand_new_field_" +
                                    std::to_string(round) + "    ${val}\n";
        Snapshot more_ot = parse_snapshot({{"a.robot", extra_literal}});
        CHECK(detect_one(more_ot, SmellId::OT).count >=
              detect_one(before, SmellId::OT).count);

        std::string extra_assert = base + "    Should Be Equal    ${v}    ${w}\n";
        Snapshot more_oc = parse_snapshot({{"a.robot", extra_assert}});
        CHECK(detect_one(more_oc, SmellId::OC).count >=
              detect_one(before, SmellId::OC).count);
    }
}

TEST_CASE("MA is insensitive to duplicating non-assertion calls") {
    std::string body =
        "    Click Button    ok\n"
        "    Input Text    f    v\n"
        "    Log    x\n";
    Snapshot once = parse_snapshot({{"a.robot", "*** Test Cases ***\nT\n" + body}});
    Snapshot twice = parse_snapshot({{"a.robot", "*** Test Cases ***\nT\n" + body + body}});
    CHECK(detect_one(once, SmellId::MA).count == detect_one(twice, SmellId::MA).count);

    std::string with_assert = body + "    Title Should Be    X\n";
    Snapshot a_once = parse_snapshot({{"a.robot", "*** Test Cases ***\nT\n" + with_assert}});
    Snapshot a_twice = parse_snapshot(
        {{"a.robot", "*** Test Cases ***\nT\n" + body + with_assert}});
    CHECK(detect_one(a_once, SmellId::MA).count == 0);
    CHECK(detect_one(a_twice, SmellId::MA).count == 0);
}
