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

#include "extremal/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "extremal/enumerator.hpp"
#include "extremal/errors.hpp"
#include "extremal/harmonic.hpp"

namespace extremal {

namespace {

constexpr int kLadderTop = 8;

std::string family_prefix(const CodeFamily& f) {
    return to_string(f.type()) + "." + std::string(family_token(f.family()));
}

std::string ladder_rule(const CodeFamily& f) { return family_prefix(f) + "/min-weight-ladder"; }
std::string harmonic_rule(const CodeFamily& f) { return family_prefix(f) + "/harmonic-simultaneity"; }
constexpr std::string_view kAssmusMattson = "assmus-mattson";
constexpr std::string_view kJumpSet = "jump-set";
constexpr std::string_view kKnownNonexistence = "known-nonexistence";
constexpr std::string_view kExceptionalLadder = "III.12m+8/exceptional-weight-ladder";

// Length 12m+8 instances whose exceptional weight 4m+3 is carried into the candidate sets.
// Other m = 0 (mod 3) get an explanatory note only.
constexpr std::array<int, 1> kExceptionalInstances = {63};

void fire(ClassificationRecord& rec, std::string_view id) {
    if (std::find(rec.fired_rules.begin(), rec.fired_rules.end(), id) == rec.fired_rules.end())
        rec.fired_rules.emplace_back(id);
}

// largest p with {1..p} contained in levels
int strength_prefix(const std::set<int>& levels) {
    int p = 0;
    while (levels.count(p + 1)) ++p;
    return p;
}

void finish(ClassificationRecord& rec) {
    rec.delta_candidates.clear();
    rec.s_candidates.clear();
    for (const auto& sc : rec.scenarios) {
        rec.delta_candidates.insert(sc.delta);
        rec.s_candidates.insert(sc.s_values.begin(), sc.s_values.end());
    }
}

}  // namespace

bool ClassificationRecord::permits_delta_lt_s() const {
    return std::any_of(scenarios.begin(), scenarios.end(),
                       [](const Scenario& sc) { return !sc.s_values.empty() && *sc.s_values.rbegin() > sc.delta; });
}

JumpSet guaranteed_T(const CodeFamily& f) {
    JumpSet out;
    const int n = f.length();
    out.threshold_met = f.type() == CodeType::TypeIII ? n >= 12 : (f.residue_index() != 0 || n >= 18);
    if (!out.threshold_met) {
        for (int t = 1; t <= f.base_strength(); ++t) out.strengths.insert(t);
        return out;
    }
    switch (f.residue_index()) {
        case 0: out.strengths = {1, 2, 3, 4, 5, 7}; break;
        case 1: out.strengths = {1, 2, 3, 5}; break;
        default: out.strengths = {1, 3}; break;
    }
    return out;
}

const std::vector<RuleInfo>& rule_catalog() {
    static const std::vector<RuleInfo> rules = {
        {kAssmusMattson, "every D_w is a 5-, 3- or 1-design by length residue"},
        {kJumpSet, "a t-design whose next level is guaranteed is automatically stronger"},
        {"III.12m/min-weight-ladder", "7-design needs lambda_6, lambda_7 integral; lambda_8 never is"},
        {"III.12m/harmonic-simultaneity", "degree-8 harmonic enumerator has one term with no zero coefficient"},
        {"III.12m+4/min-weight-ladder", "5-design needs lambda_4, lambda_5; 6-design needs lambda_6; lambda_7 never"},
        {"III.12m+4/harmonic-simultaneity", "degree 6 and 7 enumerators have no zero coefficient"},
        {"III.12m+8/min-weight-ladder", "3-design needs lambda_2, lambda_3; lambda_4 never is integral"},
        {"III.12m+8/harmonic-simultaneity", "degree-4 enumerator vanishes only at weight 4m+3 when 3 | m"},
        {kExceptionalLadder, "D_{4m+3} is a {1,3,4}-design; its own ladder caps its strength"},
        {"IV.6m/min-weight-ladder", "7-design needs lambda_6, lambda_7 integral; lambda_8 never is"},
        {"IV.6m/harmonic-simultaneity", "degree-8 enumerator has no zero coefficient"},
        {"IV.6m+2/min-weight-ladder", "5-design needs lambda_4, lambda_5; lambda_8 never is integral"},
        {"IV.6m+2/harmonic-simultaneity", "degree 6, 7 (and 8 when relevant) enumerators have no zero coefficient"},
        {"IV.6m+4/min-weight-ladder", "3-design needs lambda_2, lambda_3; 4 needs lambda_4; 5 needs lambda_5"},
        {"IV.6m+4/harmonic-simultaneity", "degree 4, 5 (and 6 when relevant) enumerators have no zero coefficient"},
        {kKnownNonexistence, "parameter sets proved impossible independently"},
    };
    return rules;
}

ClassificationRecord classify(const CodeFamily& f) {
    f.require_in_range();
    ClassificationRecord rec{.family = f};
    rec.base_t = f.base_strength();
    fire(rec, kAssmusMattson);

    const WeightEnumerator we = extremal_weight_enumerator(f);
    rec.negative_weights = we.negative_weights();
    if (!rec.negative_weights.empty())
        rec.notes.emplace_back("extremal enumerator has negative coefficients; the candidate sets are formal");

    const JumpSet jump = guaranteed_T(f);
    rec.guaranteed_T = jump.strengths;
    if (!jump.threshold_met) rec.notes.emplace_back("length below the jump-set range; Assmus-Mattson strengths only");

    if (f.excluded_by_hypothesis()) {
        rec.excluded = true;
        rec.notes.emplace_back("length 6m with m = 1, 2 lies outside the classification's hypothesis");
        return rec;
    }
    if (jump.strengths.size() > static_cast<std::size_t>(rec.base_t)) fire(rec, kJumpSet);

    // (1) minimum-weight ladder and known nonexistence cut the strengths D_d can have
    const DesignParams d = support_design_params(f);
    rec.ladder = lambda_ladder(d.v, d.k, d.blocks, std::min(kLadderTop, d.k));
    fire(rec, ladder_rule(f));

    int known_cap = kLadderTop + 1;  // D_d is no t-design for t >= known_cap
    for (const auto& e : rec.ladder.entries) {
        if (!e.integral) continue;
        if (auto fact = known_nonexistent(e.s, d.v, d.k, e.lambda.num())) {
            known_cap = std::min(known_cap, e.s);
            fire(rec, kKnownNonexistence);
            rec.notes.push_back(fact->reference);
        }
    }

    std::set<int> strengths;
    for (int t = rec.base_t; t <= kLadderTop; ++t) {
        if (jump.strengths.count(t + 1)) continue;  // cannot stop at t
        if (t > rec.base_t) {
            if (t > rec.ladder.s_max() || !rec.ladder.integral_through(t)) continue;
            if (t >= known_cap) continue;
        }
        strengths.insert(t);
    }
    if (strengths.count(kLadderTop))
        throw UnsupportedCase("minimum-weight ladder does not bound the strength below 8 for " + f.label());
    const int t_max = *strengths.rbegin();

    // (2) harmonic simultaneity at the analyzed degrees
    std::optional<VanishingReport> exceptional_rep;
    for (const auto& pair : analyzed_pairs()) {
        if (pair.family != f.family()) continue;
        const VanishingReport rep = harmonic_shape(f, pair.k);
        const bool relevant = pair.k <= t_max + 1;
        if (rep.simultaneous()) {
            rec.simultaneous_levels.insert(pair.k);
            if (relevant) fire(rec, harmonic_rule(f));
            continue;
        }
        for (int w : rep.exceptional_weights) {
            rec.exceptional.push_back(
                {w, "harmonic degree " + std::to_string(pair.k) + " coefficient vanishes identically at weight " +
                        std::to_string(w) + (relevant ? "" : " (irrelevant: strength capped at " +
                                                                 std::to_string(t_max) + ")")});
        }
        if (relevant) {
            fire(rec, harmonic_rule(f));
            exceptional_rep = rep;
        }
    }

    for (int t : strengths) rec.scenarios.push_back({t, {t}});

    // (3) exceptional weight: D_w* has every guaranteed level plus k; its own ladder caps it
    if (exceptional_rep && exceptional_rep->exceptional_weights.size() == 1) {
        const int w = *exceptional_rep->exceptional_weights.begin();
        const BigInt count = we.count(w);
        const IntegralityLadder wl = lambda_ladder(f.length(), w, count, std::min(kLadderTop, w));
        const int cap = wl.integral_prefix();
        const bool carried = f.family() == Family::III_12m8 &&
                             std::find(kExceptionalInstances.begin(), kExceptionalInstances.end(), f.m()) !=
                                 kExceptionalInstances.end();
        if (carried) {
            fire(rec, kExceptionalLadder);
            std::vector<Scenario> next;
            for (const auto& sc : rec.scenarios) {
                std::set<int> levels = jump.strengths;
                for (int s = 1; s <= sc.delta; ++s) levels.insert(s);
                levels.insert(exceptional_rep->k);
                const int floor = strength_prefix(levels);
                if (floor <= sc.delta) {
                    next.push_back(sc);
                    continue;
                }
                std::set<int> s_values;
                for (int s = floor; s <= cap; ++s) s_values.insert(s);
                if (!s_values.empty()) next.push_back({sc.delta, s_values});
            }
            rec.scenarios = std::move(next);
            rec.notes.push_back("weight " + std::to_string(w) + ": lambda ladder of the raw codeword count is integral through t=" +
                                std::to_string(cap));
        } else {
            rec.notes.push_back("weight " + std::to_string(w) + ": lambda ladder of the raw codeword count is integral through t=" +
                                std::to_string(cap) + "; not carried into the candidate sets, which follow the published statement");
        }
    }

    finish(rec);
    if (rec.delta_candidates.empty() || *rec.delta_candidates.begin() != rec.base_t)
        throw InternalError("classification lost the Assmus-Mattson strength for " + f.label());
    return rec;
}

std::vector<ClassificationRecord> classify_all(std::span<const Family> families, int jobs) {
    std::vector<CodeFamily> items;
    for (Family fam : families)
        for (int m = 1; m <= zhang_max_m(fam); ++m) items.emplace_back(fam, m);

    std::vector<std::optional<ClassificationRecord>> slots(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                slots[i] = classify(items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    }

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<ClassificationRecord> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<ClassificationRecord> delta_lt_s_candidates(std::span<const Family> families, int jobs) {
    std::vector<ClassificationRecord> out;
    for (auto& rec : classify_all(families, jobs))
        if (!rec.excluded && rec.permits_delta_lt_s()) out.push_back(std::move(rec));
    return out;
}

}  // namespace extremal
