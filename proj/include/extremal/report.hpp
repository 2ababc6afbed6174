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

#ifndef EXTREMAL_REPORT_HPP
#define EXTREMAL_REPORT_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "extremal/classifier.hpp"
#include "extremal/enumerator.hpp"
#include "extremal/harmonic.hpp"

namespace extremal {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

/*
   Structured output of every CLI command. Keys serialize in sorted order and big integers are
   always decimal strings, so identical inputs give byte-identical documents.
*/
struct ReportDocument {
    std::string schema_version = kSchemaVersion;
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    Json provenance = Json::array();  // [{path, clause}] for values matching a published result

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

void to_json(Json& j, const ReportDocument& doc);
void from_json(const Json& j, ReportDocument& doc);

std::string serialize(const ReportDocument& doc);
ReportDocument parse_report(const std::string& text);

std::string format_scenarios(const std::vector<Scenario>& scenarios);
std::string join_set(const std::set<int>& s, const char* sep = ",");

Json ladder_json(const IntegralityLadder& ladder);
/// Classification entry; includes the published clause id and whether the record agrees with it.
Json record_json(const ClassificationRecord& rec);
/// Entry for a length past Zhang's bound.
Json nonexistent_json(const CodeFamily& f);

struct LemmaCheckRow {
    int alpha = 0;
    std::optional<std::set<int>> closed_form;  // absent for r3
    bool square_condition = false;             // r3 only
    std::set<int> expansion;
    bool agree = false;
};

/// Closed form vs brute-force expansion for alpha in [lo, hi]. For r3 a row agrees when the
/// square condition holds or the expansion has no zero.
std::vector<LemmaCheckRow> lemma_check(CoreProduct c, int lo, int hi);
Json lemma_row_json(const LemmaCheckRow& row);

}  // namespace extremal

#endif
