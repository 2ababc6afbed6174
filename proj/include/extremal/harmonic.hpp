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

#ifndef EXTREMAL_HARMONIC_HPP
#define EXTREMAL_HARMONIC_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/code_family.hpp"
#include "extremal/homo_poly.hpp"

namespace extremal {

/*
   The five core products whose coefficients decide design strength beyond Assmus-Mattson:

     Q1 = (x^4 + 8xy^3)(x^3 - y^3)^a            Q2 = (x^6 - 20x^3y^3 - 8y^6)(x^3 - y^3)^a
     R1 = (x^2 + 3y^2)(x^2 - y^2)^a             R2 = (x^3 - 9xy^2)(x^2 - y^2)^a
     R3 = (x^2 + 3y^2)^2 (x^2 - y^2)^a

   Zero sets are indices i on the y-degree grid (coefficient of y^(3i) for Q, y^(2i) for R).
*/
enum class CoreProduct { Q1, Q2, R1, R2, R3 };

std::string_view to_string(CoreProduct c);
std::optional<CoreProduct> parse_core_product(std::string_view token);

HomoPoly core_product(CoreProduct c, int alpha);
int grid_step(CoreProduct c);

/// Closed forms: Q1 vanishes only at i with alpha = 9i - 1, R1 only at alpha = 4i - 1; Q2 and R2 never.
std::set<int> q1_zeros(int alpha);
std::set<int> q2_zeros(int alpha);
std::set<int> r1_zeros(int alpha);
std::set<int> r2_zeros(int alpha);
/// Necessary condition for any zero coefficient of R3: 48*alpha + 112 is a perfect square.
bool r3_zero_condition(int alpha);

/// Closed-form zero set; nullopt for R3, which only has a necessary condition.
std::optional<std::set<int>> closed_form_zeros(CoreProduct c, int alpha);
/// Grid indices 0..top with a zero coefficient, by expanding the product.
std::set<int> zeros_by_expansion(CoreProduct c, int alpha);

/// One basis coefficient a_i left free by extremality: prefactor * B1^exponent * B2^index.
struct SurvivingTerm {
    int index;
    int exponent;
};

/// Basis coefficients of Z_{C,f} (f harmonic of degree k >= 1) not forced to zero by the
/// vanishing of all weights below the minimum distance.
std::vector<SurvivingTerm> surviving_terms(const CodeFamily& f, int k);

struct VanishingReport {
    CodeFamily family;
    int k;
    std::string prefactor_name;
    std::optional<SurvivingTerm> term;  // empty when W_{C,f} vanishes identically
    int y_offset = 0;                   // W = c (xy)^k y^y_offset core
    std::optional<CoreProduct> core_kind;
    int alpha = 0;
    HomoPoly core;
    HomoPoly forced_form;          // (xy)^k * Z_{C,f} up to the scalar c(f); degree n
    std::set<int> zero_y_degrees;  // y-degrees of vanishing core coefficients
    std::set<int> exceptional_weights;

    bool vanishes_identically() const { return !term.has_value(); }
    /// no weight escapes: every D_w is a k-design or none is
    bool simultaneous() const { return exceptional_weights.empty(); }
};

struct AnalyzedPair {
    Family family;
    int k;
};

/// (family, k) pairs with a single surviving term in every in-range code.
const std::vector<AnalyzedPair>& analyzed_pairs();

/// Forced shape of W_{C,f} and the weights where its coefficient vanishes identically.
/// Throws UnsupportedCase for pairs outside analyzed_pairs().
VanishingReport harmonic_shape(const CodeFamily& f, int k);

}  // namespace extremal

#endif
