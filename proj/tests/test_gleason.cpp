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

#include "extremal/bignum.hpp"
#include "extremal/code_family.hpp"
#include "extremal/gleason.hpp"

using namespace extremal;

namespace {

// p(a x + b y, c x + e y), expanded directly from binomials
HomoPoly substitute(const HomoPoly& p, long a, long b, long c, long e) {
    const std::size_t n = p.degree();
    std::vector<BigInt> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        if (p[j] == 0) continue;
        const std::size_t xe = n - j;
        // (a x + b y)^xe (c x + e y)^j
        for (std::size_t r = 0; r <= xe; ++r) {
            BigInt left = binom(static_cast<long>(xe), static_cast<long>(r));
            BigInt pa, pb;
            mpz_pow_ui(pa.get_mpz_t(), BigInt(a).get_mpz_t(), xe - r);
            mpz_pow_ui(pb.get_mpz_t(), BigInt(b).get_mpz_t(), r);
            left *= pa * pb;
            for (std::size_t s = 0; s <= j; ++s) {
                BigInt pc, pe;
                mpz_pow_ui(pc.get_mpz_t(), BigInt(c).get_mpz_t(), j - s);
                mpz_pow_ui(pe.get_mpz_t(), BigInt(e).get_mpz_t(), s);
                out[r + s] += p[j] * left * binom(static_cast<long>(j), static_cast<long>(s)) * pc * pe;
            }
        }
    }
    return HomoPoly(std::move(out));
}

BigInt power(long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

}  // namespace

TEST_CASE("generator coefficients") {
    const auto& g = ternary_generators();
    CHECK(g.g4 == HomoPoly{1, 0, 0, 8, 0});
    CHECK(g.p4 == HomoPoly{0, 1, 0, 0, -1});
    CHECK(g.p6 == HomoPoly{1, 0, 0, -20, 0, 0, -8});
    CHECK(g.g12 == HomoPoly{0, 0, 0, 1, 0, 0, -3, 0, 0, 3, 0, 0, -1});
    const auto& h = quaternary_generators();
    CHECK(h.h2 == HomoPoly{1, 0, 3});
    CHECK(h.h6 == HomoPoly{0, 0, 1, 0, -2, 0, 1});
    CHECK(h.q3 == HomoPoly{0, 1, 0, -1});
    CHECK(h.r3 == HomoPoly{1, 0, -9, 0});
    CHECK(generators(CodeType::TypeIII).size() == 4);
    CHECK(generators(CodeType::TypeIV).count("h6") == 1);
}

TEST_CASE("classical enumerators in the basis") {
    const auto& g = ternary_generators();
    const HomoPoly golay = poly_pow(g.g4, 3) - g.g12 * BigInt(24);
    CHECK(golay == HomoPoly{1, 0, 0, 0, 0, 0, 264, 0, 0, 440, 0, 0, 24});
    const auto& h = quaternary_generators();
    const HomoPoly hexacode = poly_pow(h.h2, 3) - h.h6 * BigInt(9);
    CHECK(hexacode == HomoPoly{1, 0, 0, 0, 45, 0, 18});
}

TEST_CASE("basis forms are MacWilliams invariant") {
    const auto& g = ternary_generators();
    // W((x + 2y)/sqrt 3, (x - y)/sqrt 3) = W(x, y)
    for (const HomoPoly* p : {&g.g4, &g.g12})
        CHECK(substitute(*p, 1, 2, 1, -1) == *p * power(3, p->degree() / 2));
    const auto& h = quaternary_generators();
    // W((x + 3y)/2, (x - y)/2) = W(x, y)
    for (const HomoPoly* p : {&h.h2, &h.h6})
        CHECK(substitute(*p, 1, 3, 1, -1) == *p * power(2, p->degree()));
}

TEST_CASE("ring pieces by harmonic degree") {
    CHECK(ring_piece(CodeType::TypeIII, 0).prefactor_name == "1");
    CHECK(ring_piece(CodeType::TypeIII, 4).prefactor_name == "p4^2");
    CHECK(ring_piece(CodeType::TypeIII, 6).prefactor_name == "1");
    CHECK(ring_piece(CodeType::TypeIII, 7).prefactor_name == "p4^2*p6");
    CHECK(ring_piece(CodeType::TypeIII, 7).character == std::pair{1, 2});
    CHECK(ring_piece(CodeType::TypeIII, 8).prefactor_name == "p4");
    CHECK(ring_piece(CodeType::TypeIII, 3).prefactor_name == "p6");
    const RingPiece even = ring_piece(CodeType::TypeIV, 6);
    CHECK(even.prefactor_name == "1");
    CHECK(even.character == std::pair{0, 0});
    const RingPiece odd = ring_piece(CodeType::TypeIV, 5);
    CHECK(odd.prefactor_name == "q3*r3");
    CHECK(odd.prefactor.degree() == 6);
    CHECK(odd.first == quaternary_generators().h2);
}

TEST_CASE("degree bookkeeping reaches every in-range length") {
    // n = deg(prefactor) + 2k + a * deg(B1) + b * deg(B2) with a, b >= 0
    for (Family fam : kAllFamilies) {
        const CodeType t = code_type(fam);
        for (unsigned k = 0; k <= 10; ++k) {
            const RingPiece piece = ring_piece(t, k);
            const int d1 = static_cast<int>(piece.first.degree());
            const int d2 = static_cast<int>(piece.second.degree());
            const int base = static_cast<int>(piece.prefactor.degree()) + 2 * static_cast<int>(k);
            for (int m = 1; m <= zhang_max_m(fam); ++m) {
                const int n = CodeFamily(fam, m).length();
                if (n < base) continue;
                bool reachable = false;
                for (int b = 0; b * d2 <= n - base && !reachable; ++b) reachable = (n - base - b * d2) % d1 == 0;
                CAPTURE(n);
                CAPTURE(k);
                CHECK(reachable);
            }
        }
    }
}
