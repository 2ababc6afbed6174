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

#ifndef EXTREMAL_CODE_FAMILY_HPP
#define EXTREMAL_CODE_FAMILY_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "extremal/gleason.hpp"

namespace extremal {

/// Length residue families. Type III lengths are 12m, 12m+4, 12m+8; Type IV lengths are 6m, 6m+2, 6m+4.
enum class Family { III_12m, III_12m4, III_12m8, IV_6m, IV_6m2, IV_6m4 };

inline constexpr std::array<Family, 6> kAllFamilies = {Family::III_12m, Family::III_12m4, Family::III_12m8,
                                                       Family::IV_6m,   Family::IV_6m2,   Family::IV_6m4};

CodeType code_type(Family f);
/// "12m", "12m+4", ..., "6m+4"
std::string_view family_token(Family f);
std::optional<Family> parse_family(CodeType t, std::string_view token);
/// Largest m for which an extremal code of this family is not ruled out by Zhang's bound.
int zhang_max_m(Family f);

/*
   An extremal code family at a fixed parameter m. Construction never fails; operations that
   need an existing length call require_in_range(), which throws RangeError past Zhang's bound.
*/
class CodeFamily {
   public:
    CodeFamily(Family family, int m);

    Family family() const { return family_; }
    CodeType type() const { return code_type(family_); }
    int m() const { return m_; }

    int length() const;
    int dimension() const { return length() / 2; }
    /// 3m+3 (Type III) or 2m+2 (Type IV)
    int min_distance() const;
    /// 0, 1 or 2: position of the family inside its type (12m / 12m+4 / 12m+8, 6m / 6m+2 / 6m+4)
    int residue_index() const;
    /// 5, 3 or 1: strength every support design has by Assmus-Mattson.
    int base_strength() const;

    bool in_zhang_range() const { return m_ <= zhang_max_m(family_); }
    /// Type IV length 6m with m = 1, 2 sits outside the main classification's hypothesis.
    bool excluded_by_hypothesis() const { return family_ == Family::IV_6m && m_ <= 2; }
    void require_in_range() const;

    /// e.g. "III 12m+8 m=63 (n=764)"
    std::string label() const;

    friend bool operator==(const CodeFamily&, const CodeFamily&) = default;

   private:
    Family family_;
    int m_;
};

}  // namespace extremal

#endif
