#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "suitlint/calltree.hpp"
#include "suitlint/clones.hpp"

namespace suitlint {

// Stable smell identifiers, ordered case-insensitively by code.
enum class SmellId {
    AoC,  // Army of Clones
    CA,   // Conditional Assertions
    HE,   // Hardcoded Environment
    HTD,  // Hidden Test Data
    LoE,  // Lack of Encapsulation
    LTS,  // Long Test Steps
    MA,   // Missing Assertion
    MM,   // Middle Man
    N,    // Narcissistic
    NL,   // Noisy Logging
    OC,   // Over-Checking
    OT,   // Obscure Test
    OtF,  // On the Fly
    SC,   // Sneaky Checking
    SL,   // Sensitive Locators
    SS,   // Stinky Synchronization
};

inline constexpr int kSmellCount = 16;

const char* smell_code(SmellId id);
const char* smell_name(SmellId id);
std::vector<SmellId> all_smells();
SmellId smell_from_code(const std::string& code);  // throws ConfigError

struct SmellFinding {
    SmellId smell = SmellId::AoC;
    long long count = 0;        // S
    long long denominator = 0;  // 0 => density is ABSENT
    std::vector<NodeLoc> nodes;  // one location per symptomatic entity

    // Every location where a symptomatic entity occurs; a deduplicated
    // argument entity contributes all of its occurrence sites here.
    std::set<std::string> occurrence_keys;

    bool density_absent() const { return denominator == 0; }
    double density() const {
        return denominator == 0 ? 0.0
                                : static_cast<double>(count) / static_cast<double>(denominator);
    }
};

struct DetectorConfig {
    int long_step_threshold = 13;
    std::vector<std::string> languages = {"en", "fr"};
    CloneType clone_type = CloneType::type2;

    // First-person subject pronouns per language code.
    static const std::map<std::string, std::vector<std::string>>& pronoun_lexicons();
    std::vector<std::string> enabled_pronouns() const;
};

SmellFinding detect_AoC(const CallTree& tree, const CloneIndex& clones,
                        const DetectorConfig& config);
SmellFinding detect_CA(const CallTree& tree);
SmellFinding detect_HE(const CallTree& tree);
SmellFinding detect_HTD(const CallTree& tree);
SmellFinding detect_LoE(const CallTree& tree);
SmellFinding detect_LTS(const CallTree& tree, const DetectorConfig& config);
SmellFinding detect_MA(const CallTree& tree);
SmellFinding detect_MM(const CallTree& tree);
SmellFinding detect_N(const CallTree& tree, const DetectorConfig& config);
SmellFinding detect_NL(const CallTree& tree);
SmellFinding detect_OC(const CallTree& tree);
SmellFinding detect_OT(const CallTree& tree);
SmellFinding detect_OtF(const CallTree& tree);
SmellFinding detect_SC(const CallTree& tree);
SmellFinding detect_SL(const CallTree& tree);
SmellFinding detect_SS(const CallTree& tree);

// All sixteen findings in SmellId order.
std::vector<SmellFinding> detect_all(const CallTree& tree, const CloneIndex& clones,
                                     const DetectorConfig& config);

// Shared enumeration helpers, exposed for the evolution matching logic.
namespace treeview {

// Resolved library-keyword calls in the test body (C_t).
std::vector<const CallNode*> body_library_calls(const CallTree& tree);
// Resolved library-keyword calls reachable from the setup subtree.
std::vector<const CallNode*> setup_library_calls(const CallTree& tree);
// Resolved direct children of the root (C_step).
std::vector<const CallNode*> steps(const CallTree& tree);
// Unique user keywords called in the body, first-instance pre-order (K_t).
std::vector<const CallNode*> unique_user_keywords(const CallTree& tree);
// Library calls flagged "action" in the subtree rooted at node (inclusive).
int action_leaf_count(const CallNode* node);
// True when the keyword behind this call delegates: its body is a single
// non-logging call to another user keyword.
bool is_delegate(const CallNode* instance);
// True when the keyword behind this call only performs one assertion.
bool is_assertion_wrapper(const CallNode* instance);
// First leading token of a (BDD-stripped) step name matches a pronoun.
bool name_has_leading_pronoun(const std::string& name, const std::vector<std::string>& pronouns);

}  // namespace treeview

}  // namespace suitlint
