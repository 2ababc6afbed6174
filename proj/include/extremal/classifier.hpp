/*
   Copyright 2026 The extremal-designs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EXTREMAL_CLASSIFIER_HPP
#define EXTREMAL_CLASSIFIER_HPP

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/code_family.hpp"
#include "extremal/design.hpp"

namespace extremal {

/// One admissible outcome: delta(C) = delta and s(C) takes one of s_values.
struct Scenario {
    int delta;
    std::set<int> s_values;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct ExceptionalNote {
    int weight;
    std::string note;
};

/*
   What the inference rules allow for delta(C) and s(C) of an extremal code of the family.
   These are candidate sets only: whether a higher strength is actually attained is unknown.
*/
struct ClassificationRecord {
    CodeFamily family;
    bool excluded = false;  // outside the classification's hypothesis (length 6m, m <= 2)
    int base_t = 0;
    std::set<int> guaranteed_T{};
    IntegralityLadder ladder{};            // minimum-weight support design
    std::set<int> simultaneous_levels{};   // harmonic degrees where all D_w agree
    std::vector<Scenario> scenarios{};
    std::set<int> delta_candidates{};
    std::set<int> s_candidates{};
    std::vector<ExceptionalNote> exceptional{};
    std::vector<int> negative_weights{};  // formal enumerator counts below zero: no such code exists
    std::vector<std::string> fired_rules{};
    std::vector<std::string> notes{};

    bool permits_delta_lt_s() const;
};

struct JumpSet {
    std::set<int> strengths;
    bool threshold_met = true;  // false: length below the jump-set range, Assmus-Mattson only
};

/// Strengths every support design attains: {1,2,3,4,5,7}, {1,2,3,5} or {1,3} by residue class.
JumpSet guaranteed_T(const CodeFamily& f);

struct RuleInfo {
    std::string_view id;
    std::string_view effect;
};

/// Every rule the classifier can fire, in firing order.
const std::vector<RuleInfo>& rule_catalog();

/// Throws RangeError past Zhang's bound.
ClassificationRecord classify(const CodeFamily& f);

/// classify() over every in-range m of each family, ordered by family then m. jobs > 1 fans
/// out over worker threads; the ordering does not depend on it.
std::vector<ClassificationRecord> classify_all(std::span<const Family> families, int jobs = 1);

/// Records of the sweep whose candidate sets allow delta(C) < s(C).
std::vector<ClassificationRecord> delta_lt_s_candidates(std::span<const Family> families = kAllFamilies,
                                                        int jobs = 1);

}  // namespace extremal

#endif
