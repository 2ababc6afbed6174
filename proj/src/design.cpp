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

#include "extremal/design.hpp"

#include "extremal/code_family.hpp"
#include "extremal/enumerator.hpp"
#include "extremal/errors.hpp"

namespace extremal {

DesignParams make_design(int v, int k, int t, const BigInt& lambda) {
    if (!(0 < t && t <= k && k <= v))
        throw DomainError("design needs 0 < t <= k <= v, got t=" + std::to_string(t) + " k=" + std::to_string(k) +
                          " v=" + std::to_string(v));
    if (lambda < 1) throw DomainError("design index must be at least 1");
    const BigRational blocks = BigRational(lambda * binom(v, t), binom(k, t));
    if (!blocks.is_integer())
        throw DomainError(std::to_string(t) + "-(" + std::to_string(v) + "," + std::to_string(k) + "," +
                          to_string(lambda) + ") has non-integral block count " + blocks.to_string());
    return DesignParams{v, k, t, lambda, blocks.num()};
}

BigRational lambda_down(const DesignParams& d, int s) {
    if (s < 0 || s > d.t)
        throw DomainError("lambda_down: s=" + std::to_string(s) + " outside 0.." + std::to_string(d.t));
    return BigRational(d.lambda * binom(d.v - s, d.t - s), binom(d.k - s, d.t - s));
}

const LadderEntry& IntegralityLadder::at(int s) const {
    if (s < 1 || s > s_max()) throw DomainError("ladder has no entry for s=" + std::to_string(s));
    return entries[s - 1];
}

bool IntegralityLadder::integral_through(int t) const {
    if (t > s_max()) throw DomainError("ladder only reaches s=" + std::to_string(s_max()));
    for (int s = 1; s <= t; ++s)
        if (!entries[s - 1].integral) return false;
    return true;
}

int IntegralityLadder::integral_prefix() const {
    int t = 0;
    while (t < s_max() && entries[t].integral) ++t;
    return t;
}

IntegralityLadder lambda_ladder(int v, int k, const BigInt& blocks, int s_max) {
    if (!(0 < k && k <= v)) throw DomainError("lambda_ladder needs 0 < k <= v");
    if (s_max < 1 || s_max > k)
        throw DomainError("lambda_ladder: s_max=" + std::to_string(s_max) + " outside 1.." + std::to_string(k));
    IntegralityLadder out{v, k, blocks, {}};
    out.entries.reserve(s_max);
    for (int s = 1; s <= s_max; ++s) {
        BigRational l(blocks * binom(k, s), binom(v, s));
        const bool ok = l.is_positive_integer();
        out.entries.push_back({s, std::move(l), ok});
    }
    return out;
}

const std::vector<KnownNonexistence>& known_facts() {
    static const std::vector<KnownNonexistence> facts = {
        {3, 16, 6, 2, "Brouwer 1977: no 3-(16,6,2) design exists"},
    };
    return facts;
}

std::optional<KnownNonexistence> known_nonexistent(int t, int v, int k, const BigInt& lambda) {
    for (const auto& f : known_facts())
        if (f.t == t && f.v == v && f.k == k && lambda == f.lambda) return f;
    return std::nullopt;
}

std::vector<LadderEntry> max_integral_t(const CodeFamily& f) {
    const DesignParams d = support_design_params(f);
    constexpr int kTop = 8;
    const IntegralityLadder ladder = lambda_ladder(d.v, d.k, d.blocks, std::min(kTop, d.k));
    std::vector<LadderEntry> out;
    for (int t = d.t + 1; t <= kTop; ++t) {
        if (t <= ladder.s_max())
            out.push_back(ladder.at(t));
        else
            out.push_back({t, BigRational(0), false});
    }
    return out;
}

}  // namespace extremal
