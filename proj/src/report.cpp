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

#include "extremal/report.hpp"

#include <sstream>

#include "extremal/errors.hpp"
#include "extremal/published.hpp"

namespace extremal {

void to_json(Json& j, const ReportDocument& doc) {
    j = Json{{"schema_version", doc.schema_version},
             {"command", doc.command},
             {"inputs", doc.inputs},
             {"results", doc.results},
             {"provenance", doc.provenance}};
}

void from_json(const Json& j, ReportDocument& doc) {
    j.at("schema_version").get_to(doc.schema_version);
    j.at("command").get_to(doc.command);
    doc.inputs = j.at("inputs");
    doc.results = j.at("results");
    doc.provenance = j.at("provenance");
}

std::string serialize(const ReportDocument& doc) { return Json(doc).dump(2) + "\n"; }

ReportDocument parse_report(const std::string& text) { return Json::parse(text).get<ReportDocument>(); }

std::string join_set(const std::set<int>& s, const char* sep) {
    std::ostringstream os;
    bool first = true;
    for (int v : s) {
        if (!first) os << sep;
        os << v;
        first = false;
    }
    return os.str();
}

std::string format_scenarios(const std::vector<Scenario>& scenarios) {
    std::ostringstream os;
    // fold delta = s scenarios into one "delta=s in {..}" group, keep the rest explicit
    std::set<int> equal;
    std::vector<const Scenario*> rest;
    for (const auto& sc : scenarios) {
        if (sc.s_values == std::set<int>{sc.delta})
            equal.insert(sc.delta);
        else
            rest.push_back(&sc);
    }
    bool first = true;
    if (!equal.empty()) {
        os << (equal.size() == 1 ? "delta=s=" + join_set(equal) : "delta=s in {" + join_set(equal) + "}");
        first = false;
    }
    for (const Scenario* sc : rest) {
        if (!first) os << " | ";
        os << "delta=" << sc->delta << ", s in {" << join_set(sc->s_values) << "}";
        first = false;
    }
    if (first) os << "-";
    return os.str();
}

Json ladder_json(const IntegralityLadder& ladder) {
    Json arr = Json::array();
    for (const auto& e : ladder.entries)
        arr.push_back({{"s", e.s}, {"lambda", e.lambda.to_string()}, {"integral", e.integral}});
    return arr;
}

Json record_json(const ClassificationRecord& rec) {
    const CodeFamily& f = rec.family;
    Json scen = Json::array();
    for (const auto& sc : rec.scenarios) scen.push_back({{"delta", sc.delta}, {"s", sc.s_values}});
    Json exc = Json::array();
    for (const auto& e : rec.exceptional) exc.push_back({{"weight", e.weight}, {"note", e.note}});
    Json j{{"type", to_string(f.type())},
           {"family", std::string(family_token(f.family()))},
           {"m", f.m()},
           {"n", f.length()},
           {"d", f.min_distance()},
           {"status", rec.excluded ? "excluded-by-hypothesis" : "classified"},
           {"base_t", rec.base_t},
           {"guaranteed_T", rec.guaranteed_T},
           {"ladder", ladder_json(rec.ladder)},
           {"simultaneous_levels", rec.simultaneous_levels},
           {"scenarios", scen},
           {"delta_candidates", rec.delta_candidates},
           {"s_candidates", rec.s_candidates},
           {"exceptional", exc},
           {"negative_weights", rec.negative_weights},
           {"fired_rules", rec.fired_rules},
           {"notes", rec.notes}};
    if (const PublishedClause* c = published_clause_for(f)) {
        j["published_clause"] = std::string(c->id);
        j["agrees_with_published"] = (c->scenarios == rec.scenarios);
    } else {
        j["published_clause"] = nullptr;
        j["agrees_with_published"] = nullptr;
    }
    return j;
}

Json nonexistent_json(const CodeFamily& f) {
    return Json{{"type", to_string(f.type())},
                {"family", std::string(family_token(f.family()))},
                {"m", f.m()},
                {"n", f.length()},
                {"status", "nonexistent (Zhang)"},
                {"zhang_max_m", zhang_max_m(f.family())}};
}

std::vector<LemmaCheckRow> lemma_check(CoreProduct c, int lo, int hi) {
    if (lo < 0 || hi < lo) throw DomainError("alpha range must satisfy 0 <= lo <= hi");
    std::vector<LemmaCheckRow> rows;
    rows.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int a = lo; a <= hi; ++a) {
        LemmaCheckRow row;
        row.alpha = a;
        row.expansion = zeros_by_expansion(c, a);
        row.closed_form = closed_form_zeros(c, a);
        if (row.closed_form) {
            row.agree = *row.closed_form == row.expansion;
        } else {
            row.square_condition = r3_zero_condition(a);
            row.agree = row.square_condition || row.expansion.empty();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json lemma_row_json(const LemmaCheckRow& row) {
    Json j{{"alpha", row.alpha}, {"expansion_zeros", row.expansion}, {"agree", row.agree}};
    if (row.closed_form) {
        j["closed_form_zeros"] = *row.closed_form;
    } else {
        j["square_condition"] = row.square_condition;
        j["discriminant"] = to_string(BigInt(48) * row.alpha + 112);
    }
    return j;
}

}  // namespace extremal
