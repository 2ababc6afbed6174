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

#include "extremal/gleason.hpp"

#include <array>

namespace extremal {

std::string to_string(CodeType t) { return t == CodeType::TypeIII ? "III" : "IV"; }

const TernaryGenerators& ternary_generators() {
    static const TernaryGenerators g = [] {
        const HomoPoly cube_diff{1, 0, 0, -1};  // x^3 - y^3
        return TernaryGenerators{
            poly_mul(HomoPoly{0, 1}, cube_diff),
            HomoPoly{1, 0, 0, -20, 0, 0, -8},
            HomoPoly{1, 0, 0, 8, 0},
            poly_mul(HomoPoly::monomial(3, 3), poly_pow(cube_diff, 3)),
        };
    }();
    return g;
}

const QuaternaryGenerators& quaternary_generators() {
    static const QuaternaryGenerators g = [] {
        const HomoPoly sq_diff{1, 0, -1};  // x^2 - y^2
        return QuaternaryGenerators{
            HomoPoly{1, 0, 3},
            poly_mul(HomoPoly::monomial(2, 2), poly_pow(sq_diff, 2)),
            poly_mul(HomoPoly{0, 1}, sq_diff),
            HomoPoly{1, 0, -9, 0},
        };
    }();
    return g;
}

std::map<std::string, HomoPoly> generators(CodeType t) {
    if (t == CodeType::TypeIII) {
        const auto& g = ternary_generators();
        return {{"p4", g.p4}, {"p6", g.p6}, {"g4", g.g4}, {"g12", g.g12}};
    }
    const auto& g = quaternary_generators();
    return {{"h2", g.h2}, {"h6", g.h6}, {"q3", g.q3}, {"r3", g.r3}};
}

namespace {

struct Prefactor {
    const char* name;
    HomoPoly poly;
};

// indexed by 3*u + v
const std::array<Prefactor, 6>& ternary_prefactors() {
    static const std::array<Prefactor, 6> table = [] {
        const auto& g = ternary_generators();
        const HomoPoly p4sq = poly_mul(g.p4, g.p4);
        return std::array<Prefactor, 6>{{
            {"1", HomoPoly{}},
            {"p4", g.p4},
            {"p4^2", p4sq},
            {"p6", g.p6},
            {"p4*p6", poly_mul(g.p4, g.p6)},
            {"p4^2*p6", poly_mul(p4sq, g.p6)},
        }};
    }();
    return table;
}

}  // namespace

RingPiece ring_piece(CodeType t, unsigned k) {
    if (t == CodeType::TypeIII) {
        const int u = static_cast<int>(k % 2);
        const int v = static_cast<int>((3 - k % 3) % 3);
        const auto& pf = ternary_prefactors()[3 * u + v];
        const auto& g = ternary_generators();
        return RingPiece{t, {u, v}, pf.name, pf.poly, g.g4, g.g12};
    }
    const int u = static_cast<int>(k % 2);
    const auto& g = quaternary_generators();
    if (u == 0) return RingPiece{t, {0, 0}, "1", HomoPoly{}, g.h2, g.h6};
    static const HomoPoly q3r3 = poly_mul(g.q3, g.r3);
    return RingPiece{t, {1, 1}, "q3*r3", q3r3, g.h2, g.h6};
}

}  // namespace extremal
