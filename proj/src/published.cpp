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

#include "extremal/published.hpp"

namespace extremal {

namespace {

std::vector<Scenario> equal(std::initializer_list<int> ts) {
    std::vector<Scenario> out;
    for (int t : ts) out.push_back({t, {t}});
    return out;
}

}  // namespace

const std::vector<PublishedClause>& published_clauses() {
    static const std::vector<PublishedClause> table = [] {
        const std::set<int> s12m4 = {11, 18, 21, 25, 32, 39, 43, 46, 49, 54, 60, 65, 67, 68, 74};
        std::set<int> s12m4_b = s12m4;
        s12m4_b.erase(67);
        return std::vector<PublishedClause>{
            {"III.12m/a", Family::III_12m, {15, 38, 43, 64}, true, equal({5})},
            {"III.12m/b", Family::III_12m, {15, 38, 43, 64}, false, equal({5, 7})},
            {"III.12m+4/a", Family::III_12m4, s12m4, true, equal({3})},
            {"III.12m+4/b", Family::III_12m4, s12m4_b, false, equal({3, 5})},
            {"III.12m+4/c", Family::III_12m4, {67}, false, equal({3, 5, 6})},
            {"III.12m+8/a", Family::III_12m8, {14, 37, 42, 63}, true, equal({1})},
            {"III.12m+8/b", Family::III_12m8, {14, 37, 42}, false, equal({1, 3})},
            {"III.12m+8/c", Family::III_12m8, {63}, false, {{1, {1}}, {3, {4, 5, 6}}}},
            {"IV.6m/a", Family::IV_6m, {1, 2, 10, 15}, true, equal({5})},
            {"IV.6m/b", Family::IV_6m, {10, 15}, false, equal({5, 7})},
            {"IV.6m+2/a", Family::IV_6m2, {11}, true, equal({3})},
            {"IV.6m+2/b", Family::IV_6m2, {11}, false, equal({3, 5, 6, 7})},
            {"IV.6m+4/a", Family::IV_6m4, {1, 2, 4, 13}, false, equal({1})},
            {"IV.6m+4/b", Family::IV_6m4, {3, 5, 6, 7, 8, 10, 11, 12, 15, 16, 17, 18, 20, 21}, false, equal({1, 3})},
            {"IV.6m+4/c", Family::IV_6m4, {9}, false, equal({1, 3, 4})},
            {"IV.6m+4/d", Family::IV_6m4, {14, 19}, false, equal({1, 3, 4, 5})},
        };
    }();
    return table;
}

const PublishedClause* published_clause_for(const CodeFamily& f) {
    if (!f.in_zhang_range() || f.excluded_by_hypothesis()) return nullptr;
    for (const auto& c : published_clauses())
        if (c.family == f.family() && c.applies(f.m())) return &c;
    return nullptr;
}

}  // namespace extremal
