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

#include <functional>

#include "extremal/bignum.hpp"
#include "extremal/errors.hpp"
#include "extremal/harmonic.hpp"
#include "extremal/report.hpp"

using namespace extremal;

namespace {

// Grid coefficient i of each core, summed directly from binomials: the core is
// sum_j c_j x^.. y^(step j) times (x^step - y^step)^alpha.
BigInt grid_coeff(CoreProduct c, long alpha, long i) {
    auto b = [&](long j) { return i < j ? BigInt(0) : binom(alpha, i - j); };
    BigInt v;
    switch (c) {
        case CoreProduct::Q1: v = b(0) - 8 * b(1); break;
        case CoreProduct::Q2: v = b(0) + 20 * b(1) - 8 * b(2); break;
        case CoreProduct::R1: v = b(0) - 3 * b(1); break;
        case CoreProduct::R2: v = b(0) + 9 * b(1); break;
        case CoreProduct::R3: v = b(0) - 6 * b(1) + 9 * b(2); break;
    }
    return v;  // up to the sign (-1)^i
}

int extra_grid(CoreProduct c) {
    switch (c) {
        case CoreProduct::Q2:
        case CoreProduct::R3: return 2;
        default: return 1;
    }
}

std::set<int> oracle_zeros(CoreProduct c, int alpha) {
    std::set<int> out;
    for (int i = 0; i <= alpha + extra_grid(c); ++i)
        if (grid_coeff(c, alpha, i) == 0) out.insert(i);
    return out;
}

struct Shape {
    Family family;
    int k;
    CoreProduct core;
    std::function<int(int)> alpha;  // also the y-offset
};

const std::vector<Shape>& shapes() {
    static const std::vector<Shape> table = {
        {Family::III_12m, 8, CoreProduct::Q1, [](int m) { return 3 * m - 5; }},
        {Family::III_12m4, 6, CoreProduct::Q1, [](int m) { return 3 * m - 3; }},
        {Family::III_12m4, 7, CoreProduct::Q2, [](int m) { return 3 * m - 4; }},
        {Family::III_12m8, 4, CoreProduct::Q1, [](int m) { return 3 * m - 1; }},
        {Family::IV_6m, 8, CoreProduct::R1, [](int m) { return 2 * m - 6; }},
        {Family::IV_6m2, 6, CoreProduct::R1, [](int m) { return 2 * m - 4; }},
        {Family::IV_6m2, 7, CoreProduct::R2, [](int m) { return 2 * m - 5; }},
        {Family::IV_6m2, 8, CoreProduct::R3, [](int m) { return 2 * m - 6; }},
        {Family::IV_6m4, 4, CoreProduct::R1, [](int m) { return 2 * m - 2; }},
        {Family::IV_6m4, 5, CoreProduct::R2, [](int m) { return 2 * m - 3; }},
        {Family::IV_6m4, 6, CoreProduct::R3, [](int m) { return 2 * m - 4; }},
    };
    return table;
}

}  // namespace

TEST_CASE("core products") {
    CHECK(core_product(CoreProduct::Q1, 0) == HomoPoly{1, 0, 0, 8, 0});
    CHECK(core_product(CoreProduct::R1, 1) == HomoPoly{1, 0, 2, 0, -3});
    CHECK(core_product(CoreProduct::R3, 0).degree() == 4);
    CHECK(grid_step(CoreProduct::Q2) == 3);
    CHECK(grid_step(CoreProduct::R2) == 2);
    CHECK(parse_core_product("r3") == CoreProduct::R3);
    CHECK_FALSE(parse_core_product("q3").has_value());
    CHECK(to_string(CoreProduct::Q2) == "q2");
}

TEST_CASE("closed-form zero sets") {
    CHECK(q1_zeros(8) == std::set<int>{1});
    CHECK(q1_zeros(9).empty());
    CHECK(r1_zeros(3) == std::set<int>{1});
    CHECK(q2_zeros(40).empty());
    CHECK(r2_zeros(40).empty());
    CHECK(r3_zero_condition(6));
    CHECK_FALSE(r3_zero_condition(16));
    CHECK_FALSE(r3_zero_condition(24));
    CHECK_FALSE(r3_zero_condition(34));
    CHECK_FALSE(closed_form_zeros(CoreProduct::R3, 6).has_value());
}

TEST_CASE("expansion matches the binomial oracle for alpha <= 500") {
    for (CoreProduct c : {CoreProduct::Q1, CoreProduct::Q2, CoreProduct::R1, CoreProduct::R2, CoreProduct::R3}) {
        for (int alpha = 0; alpha <= 500; ++alpha) {
            CAPTURE(to_string(c));
            CAPTURE(alpha);
            const std::set<int> oracle = oracle_zeros(c, alpha);
            REQUIRE(zeros_by_expansion(c, alpha) == oracle);
            if (auto closed = closed_form_zeros(c, alpha))
                CHECK(*closed == oracle);
            else if (!oracle.empty())
                CHECK(r3_zero_condition(alpha));
        }
    }
}

TEST_CASE("lemma check rows") {
    const auto rows = lemma_check(CoreProduct::R3, 16, 16);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].square_condition);
    CHECK(rows[0].agree);
    CHECK(lemma_row_json(rows[0])["discriminant"] == "880");
    for (const auto& r : lemma_check(CoreProduct::Q1, 0, 100)) CHECK(r.agree);
}

TEST_CASE("analyzed pairs reproduce the known harmonic shapes") {
    REQUIRE(analyzed_pairs().size() == shapes().size());
    for (const Shape& s : shapes()) {
        for (int m = 1; m <= zhang_max_m(s.family); ++m) {
            const CodeFamily f(s.family, m);
            const int alpha = s.alpha(m);
            CAPTURE(f.label());
            CAPTURE(s.k);
            if (alpha < 0) continue;
            const VanishingReport rep = harmonic_shape(f, s.k);
            REQUIRE(rep.core_kind.has_value());
            CHECK(*rep.core_kind == s.core);
            CHECK(rep.alpha == alpha);
            CHECK(rep.y_offset == alpha);
            CHECK(rep.forced_form.degree() == static_cast<std::size_t>(f.length()));
            std::set<int> expected;
            for (int i : oracle_zeros(s.core, alpha)) expected.insert(s.k + alpha + grid_step(s.core) * i);
            CHECK(rep.exceptional_weights == expected);
        }
    }
}

TEST_CASE("forced form is (xy)^k y^offset core") {
    const CodeFamily f(Family::IV_6m4, 14);
    const VanishingReport rep = harmonic_shape(f, 6);
    HomoPoly expected = poly_mul(HomoPoly::monomial(2 * 6 + 24, 6 + 24), core_product(CoreProduct::R3, 24));
    // compare up to the scalar c(f)
    const BigInt& lead = rep.forced_form[rep.forced_form.lowest_y_degree()];
    CHECK(rep.forced_form * expected[expected.lowest_y_degree()] == expected * lead);
}

TEST_CASE("surviving terms and unsupported pairs") {
    const auto terms = surviving_terms(CodeFamily(Family::III_12m8, 63), 4);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].index == 62);
    CHECK_THROWS_AS(harmonic_shape(CodeFamily(Family::III_12m, 5), 3), UnsupportedCase);
}
