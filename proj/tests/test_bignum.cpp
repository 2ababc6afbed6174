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

#include <string>
#include <vector>

#include "extremal/bignum.hpp"
#include "extremal/errors.hpp"

using namespace extremal;

TEST_CASE("binom examples") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(58, 14) == parse_bigint("10142940735900"));
    CHECK(binom(0, 0) == 1);
    CHECK(binom(-1, 0) == 0);
    CHECK_THROWS_AS(binom(5, -1), DomainError);
}

TEST_CASE("binom matches Pascal's triangle up to n = 200") {
    std::vector<BigInt> row{1};
    for (long n = 0; n <= 200; ++n) {
        for (long k = 0; k <= n; ++k) REQUIRE(binom(n, k) == row[k]);
        CHECK(binom(n, n + 1) == 0);
        std::vector<BigInt> next(row.size() + 1);
        next.front() = next.back() = 1;
        for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
}

TEST_CASE("exact_div and perfect squares") {
    CHECK(exact_div(BigInt(132), BigInt(12)) == 11);
    CHECK_THROWS_AS(exact_div(BigInt(7), BigInt(2)), InternalError);
    CHECK(is_perfect_square(BigInt(0)));
    CHECK(is_perfect_square(BigInt(1024)));
    CHECK_FALSE(is_perfect_square(BigInt(880)));
    CHECK_FALSE(is_perfect_square(BigInt(-4)));
}

TEST_CASE("rationals are kept canonical") {
    const BigRational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(BigRational(BigInt(10), BigInt(5)).is_integer());
    CHECK(BigRational(4).is_positive_integer());
    CHECK_FALSE(BigRational(0).is_positive_integer());
    CHECK_FALSE(BigRational(-2).is_positive_integer());
    CHECK(BigRational(1) / BigRational(3) + BigRational(1) / BigRational(6) == BigRational(BigInt(1), BigInt(2)));
    CHECK(BigRational(BigInt(1), BigInt(3)) < BigRational(BigInt(1), BigInt(2)));
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("big values round-trip through decimal text") {
    std::string digits = "-";
    for (int i = 0; i < 400; ++i) digits += static_cast<char>('1' + i % 9);
    const BigInt x = parse_bigint(digits);
    CHECK(to_string(x) == digits);
    const BigRational q = BigRational::parse(digits.substr(1) + "/7");
    CHECK(BigRational::parse(q.to_string()) == q);
    CHECK_THROWS_AS(parse_bigint("12a"), DomainError);
    CHECK_THROWS_AS(parse_bigint(""), DomainError);
}
