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

#include "extremal/code_family.hpp"

#include "extremal/errors.hpp"

namespace extremal {

CodeType code_type(Family f) {
    switch (f) {
        case Family::III_12m:
        case Family::III_12m4:
        case Family::III_12m8:
            return CodeType::TypeIII;
        default:
            return CodeType::TypeIV;
    }
}

std::string_view family_token(Family f) {
    switch (f) {
        case Family::III_12m: return "12m";
        case Family::III_12m4: return "12m+4";
        case Family::III_12m8: return "12m+8";
        case Family::IV_6m: return "6m";
        case Family::IV_6m2: return "6m+2";
        case Family::IV_6m4: return "6m+4";
    }
    return "?";
}

std::optional<Family> parse_family(CodeType t, std::string_view token) {
    for (Family f : kAllFamilies)
        if (code_type(f) == t && family_token(f) == token) return f;
    return std::nullopt;
}

int zhang_max_m(Family f) {
    switch (f) {
        case Family::III_12m: return 69;
        case Family::III_12m4: return 74;
        case Family::III_12m8: return 77;
        case Family::IV_6m: return 16;
        case Family::IV_6m2: return 19;
        case Family::IV_6m4: return 21;
    }
    return 0;
}

CodeFamily::CodeFamily(Family family, int m) : family_(family), m_(m) {
    if (m < 1) throw DomainError("family parameter m must be positive, got " + std::to_string(m));
}

int CodeFamily::residue_index() const {
    switch (family_) {
        case Family::III_12m:
        case Family::IV_6m:
            return 0;
        case Family::III_12m4:
        case Family::IV_6m2:
            return 1;
        default:
            return 2;
    }
}

int CodeFamily::length() const {
    if (type() == CodeType::TypeIII) return 12 * m_ + 4 * residue_index();
    return 6 * m_ + 2 * residue_index();
}

int CodeFamily::min_distance() const { return type() == CodeType::TypeIII ? 3 * m_ + 3 : 2 * m_ + 2; }

int CodeFamily::base_strength() const { return 5 - 2 * residue_index(); }

void CodeFamily::require_in_range() const {
    if (!in_zhang_range())
        throw RangeError("no extremal Type " + to_string(type()) + " code of length " + std::to_string(length()) +
                         " exists (Zhang bound: " + std::string(family_token(family_)) + " requires m <= " +
                         std::to_string(zhang_max_m(family_)) + ")");
}

std::string CodeFamily::label() const {
    return to_string(type()) + " " + std::string(family_token(family_)) + " m=" + std::to_string(m_) +
           " (n=" + std::to_string(length()) + ")";
}

}  // namespace extremal
