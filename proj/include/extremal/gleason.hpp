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

#ifndef EXTREMAL_GLEASON_HPP
#define EXTREMAL_GLEASON_HPP

#include <map>
#include <string>
#include <utility>

#include "extremal/homo_poly.hpp"

namespace extremal {

/// Type III: self-dual over F3, weights divisible by 3. Type IV: Hermitian self-dual over F4, weights even.
enum class CodeType { TypeIII, TypeIV };

std::string to_string(CodeType t);

/// Size of the alphabet: 3 or 4.
inline int field_size(CodeType t) { return t == CodeType::TypeIII ? 3 : 4; }
/// Every weight, and every y-degree of every invariant, is a multiple of this.
inline int weight_step(CodeType t) { return t == CodeType::TypeIII ? 3 : 2; }

struct TernaryGenerators {
    HomoPoly p4;   // y (x^3 - y^3)
    HomoPoly p6;   // x^6 - 20 x^3 y^3 - 8 y^6
    HomoPoly g4;   // x^4 + 8 x y^3
    HomoPoly g12;  // y^3 (x^3 - y^3)^3
};

struct QuaternaryGenerators {
    HomoPoly h2;  // x^2 + 3 y^2
    HomoPoly h6;  // y^2 (x^2 - y^2)^2
    HomoPoly q3;  // y (x^2 - y^2)
    HomoPoly r3;  // x^3 - 9 x y^2
};

const TernaryGenerators& ternary_generators();
const QuaternaryGenerators& quaternary_generators();

/// Generators keyed by name ("p4", "g12", "h2", ...).
std::map<std::string, HomoPoly> generators(CodeType t);

/*
   One isotypic piece of the invariant ring holding Z_{C,f} for f harmonic of degree k:
   prefactor * C[first, second]. The character (u, v) is (k mod 2, -k mod 3) for Type III and
   (k mod 2, k mod 2) for Type IV.
*/
struct RingPiece {
    CodeType type;
    std::pair<int, int> character;
    std::string prefactor_name;  // "1", "p4", "p4^2*p6", "q3*r3", ...
    HomoPoly prefactor;
    HomoPoly first;   // g4 or h2
    HomoPoly second;  // g12 or h6
};

RingPiece ring_piece(CodeType t, unsigned k);

}  // namespace extremal

#endif
