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

#ifndef EXTREMAL_DESIGN_HPP
#define EXTREMAL_DESIGN_HPP

#include <optional>
#include <string>
#include <vector>

#include "extremal/bignum.hpp"

namespace extremal {

class CodeFamily;

/// t-(v, k, lambda) design parameters together with the implied block count.
struct DesignParams {
    int v = 0;
    int k = 0;
    int t = 0;
    BigInt lambda;
    BigInt blocks;

    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Validates 0 < t <= k <= v, lambda >= 1 and computes blocks = lambda * binom(v,t) / binom(k,t),
/// which must be integral.
DesignParams make_design(int v, int k, int t, const BigInt& lambda);

/// Number of blocks through any s-subset, 0 <= s <= t: lambda * binom(v-s, t-s) / binom(k-s, t-s).
BigRational lambda_down(const DesignParams& d, int s);

struct LadderEntry {
    int s = 0;
    BigRational lambda;
    /// lambda is a positive integer
    bool integral = false;
};

/*
   lambda_s = blocks * binom(k, s) / binom(v, s) for s = 1..s_max. A block multiset can only be an
   s-design when every lambda_r, r <= s, is a positive integer; nothing is assumed about the
   pattern, so gaps are reported as they are.
*/
struct IntegralityLadder {
    int v = 0;
    int k = 0;
    BigInt blocks;
    std::vector<LadderEntry> entries;  // entries[s-1] holds lambda_s

    const LadderEntry& at(int s) const;
    int s_max() const { return static_cast<int>(entries.size()); }
    /// all of lambda_1..lambda_t are positive integers
    bool integral_through(int t) const;
    /// largest t with integral_through(t); 0 when lambda_1 already fails
    int integral_prefix() const;
};

IntegralityLadder lambda_ladder(int v, int k, const BigInt& blocks, int s_max);

/// Design parameters proved impossible elsewhere, independent of any divisibility argument.
struct KnownNonexistence {
    int t, v, k;
    long lambda;
    std::string reference;
};

const std::vector<KnownNonexistence>& known_facts();
std::optional<KnownNonexistence> known_nonexistent(int t, int v, int k, const BigInt& lambda);

/// lambda_t of the minimum-weight support design of f for t = base_strength+1 .. 8.
/// Strengths above the block size are reported with lambda = 0, not integral.
std::vector<LadderEntry> max_integral_t(const CodeFamily& f);

}  // namespace extremal

#endif
