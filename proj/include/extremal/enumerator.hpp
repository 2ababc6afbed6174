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

#ifndef EXTREMAL_ENUMERATOR_HPP
#define EXTREMAL_ENUMERATOR_HPP

#include <vector>

#include "extremal/bignum.hpp"
#include "extremal/code_family.hpp"
#include "extremal/design.hpp"
#include "extremal/homo_poly.hpp"

namespace extremal {

/*
   The weight enumerator every extremal code of a family must have:
     W = sum_{i=0}^{m} a_i * B1^(3(m-i)+r) * B2^i
   with (B1, B2) = (g4, g12) or (h2, h6) and r the residue index of the family. The a_i are
   fixed by A_0 = 1 and A_w = 0 for the m admissible nonzero weights below the minimum distance.
*/
struct WeightEnumerator {
    CodeFamily family;
    HomoPoly poly;                            // sum_w A_w x^(n-w) y^w
    std::vector<BigRational> gleason_coeffs;  // a_0 .. a_m

    /// A_w; zero for w outside 0..n.
    BigInt count(int w) const;
    /// sum of all A_w
    BigInt total() const;
    /// Weights whose formal count is negative. Nonempty means no code with this
    /// enumerator exists even though the length is inside Zhang's range.
    std::vector<int> negative_weights() const;
};

/// Throws RangeError past Zhang's bound and InternalError if the result fails any
/// integrality, weight-grid, minimum-distance or total-count check. Negative counts are
/// reported by negative_weights(), not thrown.
WeightEnumerator extremal_weight_enumerator(const CodeFamily& f);

/// Number of minimum-weight codewords from the classical closed-form expressions.
/// Type IV length 6m needs m >= 2 (UnsupportedCase otherwise).
BigInt min_weight_count(const CodeFamily& f);

/// Support design of the minimum-weight codewords (one block per support, scalar multiples
/// identified): (n, d, base strength, lambda) with blocks = min_weight_count / (q - 1).
DesignParams support_design_params(const CodeFamily& f);

}  // namespace extremal

#endif
