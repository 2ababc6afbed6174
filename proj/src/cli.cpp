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

#include "extremal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "extremal/classifier.hpp"
#include "extremal/enumerator.hpp"
#include "extremal/errors.hpp"
#include "extremal/harmonic.hpp"
#include "extremal/published.hpp"
#include "extremal/report.hpp"

namespace extremal {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw UsageError("unknown format '" + s + "' (expected text, json or csv)");
}

CodeType parse_type(int t) {
    if (t == 3) return CodeType::TypeIII;
    if (t == 4) return CodeType::TypeIV;
    throw UsageError("--type must be 3 or 4");
}

Family parse_family_or_throw(CodeType t, const std::string& token) {
    if (auto f = parse_family(t, token)) return *f;
    throw UsageError("unknown family '" + token + "' for Type " + to_string(t) +
                     (t == CodeType::TypeIII ? " (expected 12m, 12m+4 or 12m+8)" : " (expected 6m, 6m+2 or 6m+4)"));
}

std::pair<int, int> parse_range(const std::string& s, const char* what) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError(std::string(what) + " must look like A..B");
    try {
        std::size_t used = 0;
        const int lo = std::stoi(s.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(s);
        const std::string rest = s.substr(dots + 2);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(s);
        if (hi < lo) throw UsageError(std::string(what) + " is empty");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError(std::string(what) + " must look like A..B");
    }
}

// maps fn over items on up to `jobs` threads; result order follows the input
template <class T, class R>
std::vector<R> parallel_map(const std::vector<T>& items, int jobs, const std::function<R(const T&)>& fn) {
    std::vector<std::optional<R>> slots(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                slots[i] = fn(items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::string csv_set(const std::set<int>& s) { return join_set(s, ";"); }

std::string record_line(const ClassificationRecord& rec) {
    std::ostringstream os;
    const CodeFamily& f = rec.family;
    os << to_string(f.type()) << ' ' << family_token(f.family()) << " m=" << f.m() << " n=" << f.length()
       << " d=" << f.min_distance() << "  ";
    if (rec.excluded) {
        os << "excluded by hypothesis (length 6m, m <= 2)";
        return os.str();
    }
    os << format_scenarios(rec.scenarios) << "  T={" << join_set(rec.guaranteed_T) << "}";
    if (!rec.negative_weights.empty()) os << "  (formal: enumerator has negative A_w)";
    if (const PublishedClause* c = published_clause_for(f))
        os << "  [" << c->id << (c->scenarios == rec.scenarios ? " agrees" : " DIFFERS") << "]";
    return os.str();
}

std::string nonexistent_line(const CodeFamily& f) {
    return to_string(f.type()) + " " + std::string(family_token(f.family())) + " m=" + std::to_string(f.m()) +
           " n=" + std::to_string(f.length()) + "  nonexistent (Zhang: m <= " + std::to_string(zhang_max_m(f.family())) +
           ")";
}

const char* kCsvHeader =
    "type,family,m,n,d,status,base_t,guaranteed_T,delta_candidates,s_candidates,scenarios,published_clause,"
    "agrees,fired_rules\n";

std::string csv_row(const Json& r) {
    std::ostringstream os;
    os << r["type"].get<std::string>() << ',' << r["family"].get<std::string>() << ',' << r["m"] << ',' << r["n"]
       << ',';
    if (r["status"] == "nonexistent (Zhang)") {
        os << ",nonexistent (Zhang),,,,,,,,\n";
        return os.str();
    }
    auto set_of = [](const Json& a) { return csv_set(a.get<std::set<int>>()); };
    std::vector<Scenario> sc;
    for (const auto& s : r["scenarios"]) sc.push_back({s["delta"].get<int>(), s["s"].get<std::set<int>>()});
    std::string rules;
    for (const auto& id : r["fired_rules"]) rules += (rules.empty() ? "" : ";") + id.get<std::string>();
    os << r["d"] << ',' << r["status"].get<std::string>() << ',' << r["base_t"] << ',' << set_of(r["guaranteed_T"])
       << ',' << set_of(r["delta_candidates"]) << ',' << set_of(r["s_candidates"]) << ",\"" << format_scenarios(sc)
       << "\"," << (r["published_clause"].is_null() ? "" : r["published_clause"].get<std::string>()) << ','
       << (r["agrees_with_published"].is_null() ? "" : (r["agrees_with_published"].get<bool>() ? "yes" : "no"))
       << ',' << rules << '\n';
    return os.str();
}

void add_record_provenance(ReportDocument& doc, const std::string& base, const CodeFamily& f) {
    if (const PublishedClause* c = published_clause_for(f))
        doc.provenance.push_back({{"path", base}, {"clause", std::string(c->id)}});
}

struct Options {
    std::string format = "text";
    int jobs = 1;
    int type = 0;
    std::string family;
    std::optional<int> m;
    std::string m_range;
    std::optional<int> weight;
    int v = 0, k = 0, s_max = 0;
    std::string blocks;
    std::string lemma;
    std::string alpha_range = "0..500";
};

int cmd_classify(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    const CodeType t = parse_type(o.type);
    const Family fam = parse_family_or_throw(t, o.family);
    if (o.m.has_value() == !o.m_range.empty()) throw UsageError("give exactly one of --m or --m-range");
    int lo = 0, hi = 0;
    if (o.m) {
        lo = hi = *o.m;
    } else {
        std::tie(lo, hi) = parse_range(o.m_range, "--m-range");
    }
    if (lo < 1) throw UsageError("m must be positive");

    std::vector<CodeFamily> items;
    for (int m = lo; m <= hi; ++m) items.emplace_back(fam, m);
    const std::function<Json(const CodeFamily&)> fn = [](const CodeFamily& f) {
        return f.in_zhang_range() ? record_json(classify(f)) : nonexistent_json(f);
    };
    const std::vector<Json> entries = parallel_map(items, o.jobs, fn);

    ReportDocument doc;
    doc.command = "classify";
    doc.inputs = {{"type", o.type}, {"family", o.family}, {"m_range", {lo, hi}}};
    doc.results["records"] = entries;
    for (std::size_t i = 0; i < items.size(); ++i)
        add_record_provenance(doc, "/results/records/" + std::to_string(i), items[i]);

    if (fmt == Format::Json) {
        out << serialize(doc);
    } else if (fmt == Format::Csv) {
        out << kCsvHeader;
        for (const auto& e : entries) out << csv_row(e);
    } else {
        for (const auto& f : items)
            out << (f.in_zhang_range() ? record_line(classify(f)) : nonexistent_line(f)) << '\n';
    }
    return kExitOk;
}

int cmd_enumerator(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    const CodeType t = parse_type(o.type);
    const Family fam = parse_family_or_throw(t, o.family);
    if (!o.m || *o.m < 1) throw UsageError("--m must be a positive integer");
    const CodeFamily f(fam, *o.m);
    const WeightEnumerator we = extremal_weight_enumerator(f);  // RangeError -> exit 1

    ReportDocument doc;
    doc.command = "enumerator";
    doc.inputs = {{"type", o.type}, {"family", o.family}, {"m", *o.m}};
    doc.results["n"] = f.length();
    doc.results["d"] = f.min_distance();
    doc.results["negative_weights"] = we.negative_weights();
    const bool golden = fam == Family::III_12m8 && f.m() == 63;
    if (o.weight) {
        doc.inputs["weight"] = *o.weight;
        doc.results["weight"] = *o.weight;
        doc.results["count"] = to_string(we.count(*o.weight));
        if (golden && *o.weight == 255)
            doc.provenance.push_back({{"path", "/results/count"}, {"clause", std::string(kWeight255CountClause)}});
    } else {
        Json counts = Json::array();
        for (int w = 0; w <= f.length(); ++w) {
            if (we.count(w) == 0) continue;
            if (golden && w == 255)
                doc.provenance.push_back({{"path", "/results/counts/" + std::to_string(counts.size())},
                                          {"clause", std::string(kWeight255CountClause)}});
            counts.push_back({{"weight", w}, {"count", to_string(we.count(w))}});
        }
        doc.results["counts"] = counts;
        Json coeffs = Json::array();
        for (const auto& a : we.gleason_coeffs) coeffs.push_back(a.to_string());
        doc.results["gleason_coeffs"] = coeffs;
    }

    if (fmt == Format::Json) {
        out << serialize(doc);
    } else if (fmt == Format::Csv) {
        out << "weight,count\n";
        if (o.weight)
            out << *o.weight << ',' << to_string(we.count(*o.weight)) << '\n';
        else
            for (const auto& c : doc.results["counts"]) out << c["weight"] << ',' << c["count"].get<std::string>() << '\n';
    } else if (o.weight) {
        out << to_string(we.count(*o.weight)) << '\n';
    } else {
        out << "# extremal weight enumerator, " << f.label() << ", d=" << f.min_distance() << '\n';
        if (!we.negative_weights().empty())
            out << "# negative counts: no code with this enumerator exists\n";
        for (const auto& c : doc.results["counts"])
            out << "A_" << c["weight"] << " = " << c["count"].get<std::string>() << '\n';
    }
    return kExitOk;
}

int cmd_lambda(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    BigInt blocks;
    try {
        blocks = parse_bigint(o.blocks);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--blocks: ") + e.what());
    }
    IntegralityLadder ladder;
    try {
        ladder = lambda_ladder(o.v, o.k, blocks, o.s_max);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    ReportDocument doc;
    doc.command = "lambda";
    doc.inputs = {{"v", o.v}, {"k", o.k}, {"blocks", to_string(blocks)}, {"s_max", o.s_max}};
    doc.results["ladder"] = ladder_json(ladder);
    doc.results["integral_prefix"] = ladder.integral_prefix();
    Json known = Json::array();
    for (const auto& e : ladder.entries)
        if (e.integral)
            if (auto fact = known_nonexistent(e.s, o.v, o.k, e.lambda.num()))
                known.push_back({{"s", e.s}, {"reference", fact->reference}});
    doc.results["known_nonexistent"] = known;
    if (o.v == 764 && o.k == 255 && to_string(blocks) == kWeight255CountAt764)
        doc.provenance.push_back({{"path", "/results/ladder"}, {"clause", std::string(kWeight255LadderClause)}});

    if (fmt == Format::Json) {
        out << serialize(doc);
    } else if (fmt == Format::Csv) {
        out << "s,lambda,integral\n";
        for (const auto& e : ladder.entries) out << e.s << ',' << e.lambda.to_string() << ',' << e.integral << '\n';
    } else {
        out << "# lambda_s = blocks * binom(" << o.k << ", s) / binom(" << o.v << ", s)\n";
        for (const auto& e : ladder.entries)
            out << "s=" << e.s << "  " << (e.integral ? "integral    " : "non-integral") << "  " << e.lambda << '\n';
        for (const auto& kf : known) out << "known nonexistent at s=" << kf["s"] << ": " << kf["reference"].get<std::string>() << '\n';
    }
    return kExitOk;
}

int cmd_lemma_check(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    const auto kind = parse_core_product(o.lemma);
    if (!kind) throw UsageError("--lemma must be one of q1, q2, r1, r2, r3");
    const auto [lo, hi] = parse_range(o.alpha_range, "--alpha-range");
    if (lo < 0) throw UsageError("alpha must be nonnegative");
    const auto rows = lemma_check(*kind, lo, hi);
    const bool pass = std::all_of(rows.begin(), rows.end(), [](const LemmaCheckRow& r) { return r.agree; });

    ReportDocument doc;
    doc.command = "lemma-check";
    doc.inputs = {{"lemma", o.lemma}, {"alpha_range", {lo, hi}}};
    Json jr = Json::array();
    static const std::map<int, std::string_view> r3_golden = {
        {16, "IV.6m+2/m=11/k=8"}, {24, "IV.6m+4/m=14/k=6"}, {34, "IV.6m+4/m=19/k=6"}};
    for (const auto& r : rows) {
        if (*kind == CoreProduct::R3)
            if (auto it = r3_golden.find(r.alpha); it != r3_golden.end())
                doc.provenance.push_back(
                    {{"path", "/results/rows/" + std::to_string(jr.size())}, {"clause", std::string(it->second)}});
        jr.push_back(lemma_row_json(r));
    }
    doc.results["rows"] = jr;
    doc.results["pass"] = pass;

    if (fmt == Format::Json) {
        out << serialize(doc);
    } else if (fmt == Format::Csv) {
        out << "alpha,closed_form,square_condition,expansion_zeros,agree\n";
        for (const auto& r : rows)
            out << r.alpha << ',' << (r.closed_form ? csv_set(*r.closed_form) : "") << ','
                << (r.closed_form ? "" : (r.square_condition ? "true" : "false")) << ',' << csv_set(r.expansion) << ','
                << (r.agree ? "true" : "false") << '\n';
    } else {
        out << o.lemma << " alpha " << lo << ".." << hi << ": " << (pass ? "pass" : "FAIL") << " (" << rows.size()
            << " exponents)\n";
        for (const auto& r : rows) {
            const bool show = !r.expansion.empty() || !r.agree || rows.size() <= 5;
            if (!show) continue;
            out << "  alpha=" << r.alpha;
            if (!r.closed_form)
                out << "  48*alpha+112=" << 48 * r.alpha + 112 << (r.square_condition ? " (square)" : " (not a square)");
            out << "  zeros={" << join_set(r.expansion) << "}" << (r.agree ? "" : "  MISMATCH") << '\n';
        }
    }
    return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    std::vector<Family> fams;
    if (o.type != 0) {
        const CodeType t = parse_type(o.type);
        if (!o.family.empty()) {
            fams.push_back(parse_family_or_throw(t, o.family));
        } else {
            for (Family f : kAllFamilies)
                if (code_type(f) == t) fams.push_back(f);
        }
    } else if (!o.family.empty()) {
        throw UsageError("--family needs --type");
    } else {
        fams.assign(kAllFamilies.begin(), kAllFamilies.end());
    }

    const auto records = classify_all(fams, o.jobs);
    ReportDocument doc;
    doc.command = "sweep";
    doc.inputs = {{"type", o.type == 0 ? Json(nullptr) : Json(o.type)},
                  {"family", o.family.empty() ? Json(nullptr) : Json(o.family)}};
    Json recs = Json::array();
    for (const auto& r : records) {
        add_record_provenance(doc, "/results/records/" + std::to_string(recs.size()), r.family);
        recs.push_back(record_json(r));
    }
    Json lt = Json::array();
    for (const auto& r : records)
        if (!r.excluded && r.permits_delta_lt_s()) lt.push_back(record_json(r));
    if (!lt.empty())
        doc.provenance.push_back({{"path", "/results/delta_lt_s"}, {"clause", std::string(kDeltaLtSClause)}});

    // clause summary: which m each published clause covers and whether every record agrees
    Json clauses = Json::array();
    for (const auto& c : published_clauses()) {
        if (std::find(fams.begin(), fams.end(), c.family) == fams.end()) continue;
        std::set<int> ms;
        bool agree = true;
        for (const auto& r : records) {
            if (r.family.family() != c.family || r.excluded || !c.applies(r.family.m())) continue;
            ms.insert(r.family.m());
            agree = agree && r.scenarios == c.scenarios;
        }
        clauses.push_back({{"clause", std::string(c.id)}, {"m", ms}, {"outcome", format_scenarios(c.scenarios)},
                           {"agrees", agree}});
    }
    doc.results["records"] = recs;
    doc.results["delta_lt_s"] = lt;
    doc.results["clauses"] = clauses;

    if (fmt == Format::Json) {
        out << serialize(doc);
    } else if (fmt == Format::Csv) {
        out << kCsvHeader;
        for (const auto& r : recs) out << csv_row(r);
    } else {
        out << "# published clauses\n";
        for (const auto& c : clauses)
            out << "  " << c["clause"].get<std::string>() << "  " << c["outcome"].get<std::string>() << "  m in {"
                << join_set(c["m"].get<std::set<int>>()) << "}  " << (c["agrees"].get<bool>() ? "agrees" : "DIFFERS")
                << '\n';
        out << "# records\n";
        for (const auto& r : records) out << "  " << record_line(r) << '\n';
        out << "# delta < s possible\n";
        if (lt.empty()) out << "  none\n";
        for (const auto& r : records)
            if (!r.excluded && r.permits_delta_lt_s()) out << "  " << record_line(r) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Design strength of support designs of extremal Type III and Type IV codes"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text, json or csv")->capture_default_str();
    };

    auto* classify_cmd = app.add_subcommand("classify", "candidate sets for delta(C) and s(C)");
    classify_cmd->add_option("--type", o.type, "3 or 4")->required();
    classify_cmd->add_option("--family", o.family, "12m, 12m+4, 12m+8, 6m, 6m+2, 6m+4")->required();
    classify_cmd->add_option("--m", o.m, "family parameter");
    classify_cmd->add_option("--m-range", o.m_range, "inclusive range A..B");
    classify_cmd->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
    add_format(classify_cmd);

    auto* enum_cmd = app.add_subcommand("enumerator", "extremal weight enumerator");
    enum_cmd->add_option("--type", o.type, "3 or 4")->required();
    enum_cmd->add_option("--family", o.family, "length family")->required();
    enum_cmd->add_option("--m", o.m, "family parameter")->required();
    enum_cmd->add_option("--weight", o.weight, "print only A_w");
    add_format(enum_cmd);

    auto* lambda_cmd = app.add_subcommand("lambda", "lambda_s integrality ladder of a block count");
    lambda_cmd->add_option("--v", o.v, "points")->required();
    lambda_cmd->add_option("--k", o.k, "block size")->required();
    lambda_cmd->add_option("--blocks", o.blocks, "number of blocks (decimal)")->required();
    lambda_cmd->add_option("--s-max", o.s_max, "largest s")->required();
    add_format(lambda_cmd);

    auto* lemma_cmd = app.add_subcommand("lemma-check", "closed-form zero sets vs. brute-force expansion");
    lemma_cmd->add_option("--lemma", o.lemma, "q1, q2, r1, r2 or r3")->required();
    lemma_cmd->add_option("--alpha-range", o.alpha_range, "inclusive range A..B")->capture_default_str();
    add_format(lemma_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "full classification table");
    sweep_cmd->add_option("--type", o.type, "restrict to Type 3 or 4");
    sweep_cmd->add_option("--family", o.family, "restrict to one family");
    sweep_cmd->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
    add_format(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(o, out);
        if (*enum_cmd) return cmd_enumerator(o, out);
        if (*lambda_cmd) return cmd_lambda(o, out);
        if (*lemma_cmd) return cmd_lemma_check(o, out);
        if (*sweep_cmd) return cmd_sweep(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError& e) {
        err << "refused: " << e.what() << '\n';
        return kExitRange;
    } catch (const UnsupportedCase& e) {
        err << "refused: " << e.what() << '\n';
        return kExitRange;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace extremal
