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

#ifndef EXTREMAL_PUBLISHED_HPP
#define EXTREMAL_PUBLISHED_HPP

#include <set>
#include <string_view>
#include <vector>

#include "extremal/classifier.hpp"
#include "extremal/code_family.hpp"

namespace extremal {

/*
   The published delta/s classification, one entry per lettered clause. A clause applies to the
   listed m values, or to every in-range m not listed when `complement` is set. Used to label
   report output; the classifier never reads it.
*/
struct PublishedClause {
    std::string_view id;  // e.g. "III.12m+8/c"
    Family family;
    std::set<int> m_values;
    bool complement = false;
    std::vector<Scenario> scenarios;

    bool applies(int m) const { return complement != (m_values.count(m) > 0); }
};

const std::vector<PublishedClause>& published_clauses();

/// Clause id of the statement that delta(C) < s(C) can only happen at length 764.
inline constexpr std::string_view kDeltaLtSClause = "delta<s/764";

/// Printed number of weight-255 codewords of an extremal Type III code of length 764.
inline constexpr std::string_view kWeight255CountAt764 =
    "57722041604247479907056082274041845325097239194558706847"
    "5581740325339465514100889807420805771366809484288";
inline constexpr std::string_view kWeight255CountClause = "III.12m+8/m=63/A_255";
inline constexpr std::string_view kWeight255LadderClause = "III.12m+8/m=63/weight-255-ladder";

/// nullptr for lengths the published statement does not cover (length 6m, m <= 2).
const PublishedClause* published_clause_for(const CodeFamily& f);

}  // namespace extremal

#endif
