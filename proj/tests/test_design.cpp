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

#include "extremal/code_family.hpp"
#include "extremal/design.hpp"
#include "extremal/errors.hpp"

using namespace extremal;

TEST_CASE("family parameters") {
    const CodeFamily f(Family::III_12m8, 63);
    CHECK(f.length() == 764);
    CHECK(f.dimension() == 382);
    CHECK(f.min_distance() == 192);
    CHECK(f.base_strength() == 1);
    CHECK(CodeFamily(Family::IV_6m2, 11).min_distance() == 24);
    CHECK(CodeFamily(Family::IV_6m, 3).base_strength() == 5);
    CHECK(CodeFamily(Family::IV_6m, 2).excluded_by_hypothesis());
    CHECK_FALSE(CodeFamily(Family::IV_6m, 3).excluded_by_hypothesis());
    CHECK(parse_family(CodeType::TypeIV, "6m+4") == Family::IV_6m4);
    CHECK_FALSE(parse_family(CodeType::TypeIII, "6m").has_value());
    CHECK(zhang_max_m(Family::III_12m4) == 74);
    CHECK_THROWS_AS(CodeFamily(Family::III_12m, 70).require_in_range(), RangeError);
}

TEST_CASE("design construction") {
    const DesignParams d = make_design(12, 6, 5, 1);
    CHECK(d.blocks == 132);
    CHECK(lambda_down(d, 4) == BigRational(4));
    CHECK(lambda_down(d, 0) == BigRational(132));
    CHECK_THROWS_AS(make_design(12, 6, 7, 1), DomainError);
    CHECK_THROWS_AS(make_design(12, 6, 5, 0), DomainError);
    CHECK_THROWS_AS(make_design(8, 3, 2, 1), DomainError);  // 28/3 blocks
    CHECK(make_design(10, 4, 3, 1).blocks == 30);
}

TEST_CASE("lambda ladders") {
    const IntegralityLadder golay = lambda_ladder(12, 6, 132, 6);
    CHECK(golay.integral_prefix() == 5);
    CHECK(golay.at(5).lambda == BigRational(1));
    CHECK(golay.at(6).lambda == BigRational(BigInt(1), BigInt(7)));
    CHECK_FALSE(golay.integral_through(6));
    CHECK_THROWS_AS(golay.at(7), DomainError);
    CHECK_THROWS_AS(lambda_ladder(12, 6, 132, 7), DomainError);

    // every lambda_s of a t-design equals lambda_down
    const DesignParams d = make_design(24, 8, 5, 1);
    const IntegralityLadder ladder = lambda_ladder(24, 8, d.blocks, 5);
    for (int s = 1; s <= 5; ++s) CHECK(ladder.at(s).lambda == lambda_down(d, s));
}

TEST_CASE("known nonexistence") {
    CHECK(known_nonexistent(3, 16, 6, 2).has_value());
    CHECK_FALSE(known_nonexistent(3, 16, 6, 4).has_value());
    CHECK(known_facts().size() == 1);
}

TEST_CASE("ladder above the base strength") {
    const auto entries = max_integral_t(CodeFamily(Family::III_12m, 15));
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].s == 6);
    CHECK(entries[0].integral);
    CHECK(entries[1].integral);
    CHECK_FALSE(entries[2].integral);
    const auto tiny = max_integral_t(CodeFamily(Family::IV_6m2, 1));  // k = 4
    CHECK(tiny.back().s == 8);
    CHECK_FALSE(tiny.back().integral);
}
