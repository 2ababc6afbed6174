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

#include "extremal/harmonic.hpp"

#include <algorithm>

#include "extremal/errors.hpp"
#include "extremal/gleason.hpp"

namespace extremal {

std::string_view to_string(CoreProduct c) {
    switch (c) {
        case CoreProduct::Q1: return "q1";
        case CoreProduct::Q2: return "q2";
        case CoreProduct::R1: return "r1";
        case CoreProduct::R2: return "r2";
        case CoreProduct::R3: return "r3";
    }
    return "?";
}

std::optional<CoreProduct> parse_core_product(std::string_view token) {
    for (CoreProduct c : {CoreProduct::Q1, CoreProduct::Q2, CoreProduct::R1, CoreProduct::R2, CoreProduct::R3})
        if (to_string(c) == token) return c;
    return std::nullopt;
}

int grid_step(CoreProduct c) { return (c == CoreProduct::Q1 || c == CoreProduct::Q2) ? 3 : 2; }

HomoPoly core_product(CoreProduct c, int alpha) {
    if (alpha < 0) throw DomainError("core product exponent must be nonnegative");
    const auto e = static_cast<unsigned>(alpha);
    switch (c) {
        case CoreProduct::Q1: return poly_mul(ternary_generators().g4, poly_pow(HomoPoly{1, 0, 0, -1}, e));
        case CoreProduct::Q2: return poly_mul(ternary_generators().p6, poly_pow(HomoPoly{1, 0, 0, -1}, e));
        case CoreProduct::R1: return poly_mul(quaternary_generators().h2, poly_pow(HomoPoly{1, 0, -1}, e));
        case CoreProduct::R2: return poly_mul(quaternary_generators().r3, poly_pow(HomoPoly{1, 0, -1}, e));
        case CoreProduct::R3:
            return poly_mul(poly_pow(quaternary_generators().h2, 2), poly_pow(HomoPoly{1, 0, -1}, e));
    }
    throw InternalError("unknown core product");
}

std::set<int> q1_zeros(int alpha) {
    if (alpha >= 0 && (alpha + 1) % 9 == 0) return {(alpha + 1) / 9};
    return {};
}

std::set<int> q2_zeros(int) { return {}; }

std::set<int> r1_zeros(int alpha) {
    if (alpha >= 0 && (alpha + 1) % 4 == 0) return {(alpha + 1) / 4};
    return {};
}

std::set<int> r2_zeros(int) { return {}; }

bool r3_zero_condition(int alpha) { return is_perfect_square(BigInt(48) * alpha + 112); }

std::optional<std::set<int>> closed_form_zeros(CoreProduct c, int alpha) {
    switch (c) {
        case CoreProduct::Q1: return q1_zeros(alpha);
        case CoreProduct::Q2: return q2_zeros(alpha);
        case CoreProduct::R1: return r1_zeros(alpha);
        case CoreProduct::R2: return r2_zeros(alpha);
        case CoreProduct::R3: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

std::set<int> grid_zeros(const HomoPoly& p, int step) {
    std::set<int> out;
    const auto top = static_cast<int>(p.highest_y_degree());
    for (int j = 0; j <= top; j += step)
        if (p[j] == 0) out.insert(j / step);
    return out;
}

}  // namespace

std::set<int> zeros_by_expansion(CoreProduct c, int alpha) { return grid_zeros(core_product(c, alpha), grid_step(c)); }

std::vector<SurvivingTerm> surviving_terms(const CodeFamily& f, int k) {
    if (k < 1) throw DomainError("harmonic degree must be at least 1");
    const RingPiece piece = ring_piece(f.type(), static_cast<unsigned>(k));
    const int deg_first = static_cast<int>(piece.first.degree());
    const int deg_second = static_cast<int>(piece.second.degree());
    const int step = weight_step(f.type());
    const int deg_z = f.length() - 2 * k - static_cast<int>(piece.prefactor.degree());
    const int low_prefactor = static_cast<int>(piece.prefactor.lowest_y_degree());

    // Term i has lowest y-degree low_prefactor + step*i with a nonzero coefficient, and no
    // earlier term reaches below it, so every term whose lowest weight lies under d is killed
    // in turn by the extremal vanishing conditions.
    std::vector<SurvivingTerm> out;
    for (int i = 0; deg_z >= 0 && deg_second * i <= deg_z; ++i) {
        const int rest = deg_z - deg_second * i;
        if (rest % deg_first != 0) continue;
        const int lowest_weight = k + low_prefactor + step * i;
        if (lowest_weight < f.min_distance()) continue;
        out.push_back({i, rest / deg_first});
    }
    return out;
}

const std::vector<AnalyzedPair>& analyzed_pairs() {
    static const std::vector<AnalyzedPair> pairs = {
        {Family::III_12m, 8}, {Family::III_12m4, 6}, {Family::III_12m4, 7}, {Family::III_12m8, 4},
        {Family::IV_6m, 8},   {Family::IV_6m2, 6},   {Family::IV_6m2, 7},   {Family::IV_6m2, 8},
        {Family::IV_6m4, 4},  {Family::IV_6m4, 5},   {Family::IV_6m4, 6},
    };
    return pairs;
}

VanishingReport harmonic_shape(const CodeFamily& f, int k) {
    f.require_in_range();
    const auto& pairs = analyzed_pairs();
    if (std::none_of(pairs.begin(), pairs.end(),
                     [&](const AnalyzedPair& p) { return p.family == f.family() && p.k == k; }))
        throw UnsupportedCase("harmonic degree " + std::to_string(k) + " is not analyzed for " + f.label());

    const RingPiece piece = ring_piece(f.type(), static_cast<unsigned>(k));
    const int n = f.length();
    VanishingReport rep{f, k, piece.prefactor_name, std::nullopt, 0, std::nullopt, 0,
                        HomoPoly::zero(0), HomoPoly::zero(static_cast<std::size_t>(n)), {}, {}};

    const auto terms = surviving_terms(f, k);
    if (terms.size() > 1)
        throw UnsupportedCase(std::to_string(terms.size()) + " basis terms survive at k=" + std::to_string(k) +
                              " for " + f.label());
    if (terms.empty()) return rep;

    const SurvivingTerm term = terms.front();
    rep.term = term;
    const HomoPoly z = poly_mul(piece.prefactor, poly_mul(poly_pow(piece.first, static_cast<unsigned>(term.exponent)),
                                                          poly_pow(piece.second, static_cast<unsigned>(term.index))));
    rep.forced_form = poly_mul(HomoPoly::monomial(2 * static_cast<std::size_t>(k), static_cast<std::size_t>(k)), z);
    if (static_cast<int>(rep.forced_form.degree()) != n) throw InternalError("forced form has wrong degree");

    const std::size_t low = z.lowest_y_degree();
    rep.y_offset = static_cast<int>(low);
    std::vector<BigInt> shifted(z.coeffs().begin() + static_cast<std::ptrdiff_t>(low), z.coeffs().end());
    rep.core = HomoPoly(std::move(shifted));

    // name the core: it must be exactly one of the five lemma products
    const int core_deg = static_cast<int>(rep.core.degree());
    const auto candidates = f.type() == CodeType::TypeIII
                                ? std::vector<std::pair<CoreProduct, int>>{{CoreProduct::Q1, 4}, {CoreProduct::Q2, 6}}
                                : std::vector<std::pair<CoreProduct, int>>{
                                      {CoreProduct::R1, 2}, {CoreProduct::R2, 3}, {CoreProduct::R3, 4}};
    const int step = weight_step(f.type());
    for (const auto& [kind, head_deg] : candidates) {
        const int rest = core_deg - head_deg;
        if (rest < 0 || rest % step != 0) continue;
        if (core_product(kind, rest / step) == rep.core) {
            rep.core_kind = kind;
            rep.alpha = rest / step;
            break;
        }
    }
    if (!rep.core_kind) throw InternalError("forced core is none of the lemma products for " + f.label());

    for (int i : grid_zeros(rep.core, step)) {
        rep.zero_y_degrees.insert(step * i);
        rep.exceptional_weights.insert(k + rep.y_offset + step * i);
    }
    return rep;
}

}  // namespace extremal
