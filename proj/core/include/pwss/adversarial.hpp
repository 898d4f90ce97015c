#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pwss/corpus.hpp"
#include "pwss/features.hpp"
#include "pwss/strength.hpp"

namespace pwss {

class TrainedModel;

enum class RuleDirection { attack, canonical };

/// One leet substitution. Attack rules map plain characters to their leet
/// images; canonical rules are the exact inverses used by deleet().
struct PerturbationRule {
    char from = 0;
    char to = 0;
    RuleDirection direction = RuleDirection::attack;
};

/// a>@ e>3 i>1 o>0 s>$ t>7 b>8 g>9 l>1
std::vector<PerturbationRule> default_attack_rules();

/// @>a 3>e 1>i !>i 0>o $>s 5>s 7>t 8>b 9>g (the ambiguous 1 resolves to i)
std::vector<PerturbationRule> default_canonical_rules();

struct AttackPolicy {
    std::vector<PerturbationRule> rules = default_attack_rules();
    int max_substitutions = 3;
    int variants_per_password = 1;
    std::uint64_t seed = 0;
};

/// Usage error when the rule table is empty, a rule maps a character to
/// itself, or the counts are below 1.
void validate(const AttackPolicy& policy);

/// Up to variants_per_password distinct perturbed strings, each obtained
/// by substituting 1..max_substitutions eligible positions drawn by the
/// seeded generator; none equals the input. A password with nothing to
/// substitute yields an empty list. The record_index selects the per-record
/// substream so batch runs agree regardless of evaluation order.
std::vector<std::string> perturb(std::string_view password, const AttackPolicy& policy,
                                 std::uint64_t record_index = 0);

/// Appends one label-preserving variant for a seeded-random `fraction` of
/// the perturbable training records; output size is
/// |train| + round(fraction * eligible).
RecordSet augment(const RecordSet& train, const AttackPolicy& policy, double fraction);

struct RobustnessReport {
    double clean_accuracy = 0.0;      // over the whole test set
    double perturbed_accuracy = 0.0;  // over the perturbable subset
    double flip_rate = 0.0;  // correctly classified clean inputs whose variant flips class
    std::array<double, kClassCount> per_class_flip_rate{};
    std::uint64_t evaluated = 0;
    std::uint64_t perturbable = 0;
};

/// Scores the model on clean features and on one perturbed variant per
/// perturbable test password. No perturbable password is a data error.
RobustnessReport robustness_report(const TrainedModel& model, const RecordSet& test,
                                   const AttackPolicy& policy, const Wordlist& wl);

}  // namespace pwss
