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

#include <doctest.h>

#include <algorithm>

#include "extremal/classifier.hpp"
#include "extremal/errors.hpp"
#include "extremal/published.hpp"

using namespace extremal;

namespace {

bool fired(const ClassificationRecord& rec, std::string_view id) {
    return std::find(rec.fired_rules.begin(), rec.fired_rules.end(), id) != rec.fired_rules.end();
}

bool has_note(const ClassificationRecord& rec, std::string_view fragment) {
    return std::any_of(rec.notes.begin(), rec.notes.end(),
                       [&](const std::string& n) { return n.find(fragment) != std::string::npos; });
}

}  // namespace

TEST_CASE("jump sets") {
    CHECK(guaranteed_T(CodeFamily(Family::III_12m, 1)).strengths == std::set<int>{1, 2, 3, 4, 5, 7});
    CHECK(guaranteed_T(CodeFamily(Family::III_12m4, 3)).strengths == std::set<int>{1, 2, 3, 5});
    CHECK(guaranteed_T(CodeFamily(Family::IV_6m4, 3)).strengths == std::set<int>{1, 3});
    const JumpSet small = guaranteed_T(CodeFamily(Family::IV_6m, 2));
    CHECK_FALSE(small.threshold_met);
    CHECK(small.strengths == std::set<int>{1, 2, 3, 4, 5});
    CHECK(guaranteed_T(CodeFamily(Family::IV_6m, 3)).threshold_met);
}

TEST_CASE("single records") {
    const ClassificationRecord r15 = classify(CodeFamily(Family::III_12m, 15));
    CHECK(r15.delta_candidates == std::set<int>{5, 7});
    CHECK(r15.s_candidates == std::set<int>{5, 7});
    CHECK_FALSE(r15.permits_delta_lt_s());
    CHECK(fired(r15, "III.12m/min-weight-ladder"));
    CHECK(fired(r15, "III.12m/harmonic-simultaneity"));

    const ClassificationRecord r2 = classify(CodeFamily(Family::IV_6m4, 2));
    CHECK(r2.scenarios == std::vector<Scenario>{{1, {1}}});
    CHECK(fired(r2, "known-nonexistence"));

    const ClassificationRecord r764 = classify(CodeFamily(Family::III_12m8, 63));
    CHECK(r764.scenarios == std::vector<Scenario>{{1, {1}}, {3, {4, 5, 6}}});
    CHECK(r764.permits_delta_lt_s());
    CHECK(fired(r764, "III.12m+8/exceptional-weight-ladder"));
    CHECK(r764.exceptional.size() == 1);
    CHECK(r764.exceptional[0].weight == 255);
    CHECK_FALSE(r764.negative_weights.empty());

    const ClassificationRecord r512 = classify(CodeFamily(Family::III_12m8, 42));
    CHECK(r512.scenarios == std::vector<Scenario>{{1, {1}}, {3, {3}}});
    CHECK(has_note(r512, "not carried"));

    const ClassificationRecord r12 = classify(CodeFamily(Family::IV_6m, 2));
    CHECK(r12.excluded);
    CHECK(r12.scenarios.empty());
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(classify(CodeFamily(Family::III_12m, 70)), RangeError);
}

TEST_CASE("sweep invariants") {
    const auto records = classify_all(kAllFamilies, 4);
    CHECK(records.size() == 69 + 74 + 77 + 16 + 19 + 21);
    std::set<std::string> rules;
    for (const auto& rec : records) {
        CAPTURE(rec.family.label());
        rules.insert(rec.fired_rules.begin(), rec.fired_rules.end());
        if (rec.excluded) continue;
        CHECK(*rec.delta_candidates.begin() == rec.base_t);
        CHECK(*rec.s_candidates.rbegin() <= 7);
        for (const auto& sc : rec.scenarios) CHECK(*sc.s_values.begin() >= sc.delta);
    }
    for (const auto& rule : rule_catalog()) {
        CAPTURE(rule.id);
        CHECK(rules.count(std::string(rule.id)) == 1);
    }
}

TEST_CASE("worker count does not change the sweep") {
    const std::array<Family, 2> fams = {Family::IV_6m2, Family::III_12m4};
    const auto serial = classify_all(fams, 1);
    const auto parallel = classify_all(fams, 8);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].family == parallel[i].family);
        CHECK(serial[i].scenarios == parallel[i].scenarios);
        CHECK(serial[i].fired_rules == parallel[i].fired_rules);
    }
    CHECK(serial.front().family == CodeFamily(Family::IV_6m2, 1));
}

TEST_CASE("published clauses cover each in-range length once") {
    for (Family fam : kAllFamilies) {
        for (int m = 1; m <= zhang_max_m(fam); ++m) {
            const CodeFamily f(fam, m);
            int hits = 0;
            for (const auto& c : published_clauses())
                if (c.family == fam && c.applies(m)) ++hits;
            CAPTURE(f.label());
            CHECK(hits == (f.excluded_by_hypothesis() ? 0 : 1));
        }
    }
    CHECK(published_clause_for(CodeFamily(Family::III_12m, 70)) == nullptr);
}
