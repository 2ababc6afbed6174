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

#include "extremal/enumerator.hpp"

#include <numeric>

#include "extremal/errors.hpp"
#include "extremal/gleason.hpp"

namespace extremal {

namespace {

using Series = std::vector<BigInt>;

// B(x, y) supported on y-degrees 0, step, 2*step, ... read as a power series in t = (y/x)^step
Series grid_series(const HomoPoly& p, int step) {
    Series out;
    for (std::size_t j = 0; j <= p.degree(); ++j) {
        if (j % step == 0)
            out.push_back(p[j]);
        else if (p[j] != 0)
            throw InternalError("generator has a term off the y-degree grid");
    }
    return out;
}

Series series_mul(const Series& a, const Series& b, std::size_t len) {
    Series out(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            if (b[j] != 0) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

struct Basis {
    HomoPoly first;
    HomoPoly second;
};

Basis basis_for(CodeType t) {
    if (t == CodeType::TypeIII) {
        const auto& g = ternary_generators();
        return {g.g4, g.g12};
    }
    const auto& g = quaternary_generators();
    return {g.h2, g.h6};
}

// Forward substitution for a_0..a_m. Only the first m+1 grid coefficients of each basis
// element matter; element i starts at t^i with coefficient 1, so the system is unit
// lower triangular.
std::vector<BigRational> solve_gleason_coeffs(const CodeFamily& f, const Basis& basis) {
    const int m = f.m();
    const int r = f.residue_index();
    const int step = weight_step(f.type());
    const std::size_t len = static_cast<std::size_t>(m) + 1;
    const Series b1 = grid_series(basis.first, step);
    const Series b2 = grid_series(basis.second, step);

    std::vector<Series> pow1{Series{1}};
    for (int e = 1; e <= 3 * m + r; ++e) pow1.push_back(series_mul(pow1.back(), b1, len));
    std::vector<Series> pow2{Series{1}};
    for (int i = 1; i <= m; ++i) pow2.push_back(series_mul(pow2.back(), b2, len));

    std::vector<Series> low(len);
    for (int i = 0; i <= m; ++i) low[i] = series_mul(pow1[3 * (m - i) + r], pow2[i], len);

    std::vector<BigRational> a;
    a.reserve(len);
    for (int j = 0; j <= m; ++j) {
        BigRational rhs(j == 0 ? 1 : 0);
        for (int i = 0; i < j; ++i) rhs -= a[i] * BigRational(low[i][j]);
        const BigInt& pivot = low[j][j];
        if (pivot == 0) throw InternalError("zero pivot in Gleason solve");
        a.push_back(rhs / BigRational(pivot));
    }
    return a;
}

void check_enumerator(const WeightEnumerator& we) {
    const CodeFamily& f = we.family;
    const int n = f.length();
    const int d = f.min_distance();
    const int step = weight_step(f.type());
    if (static_cast<int>(we.poly.degree()) != n) throw InternalError("enumerator degree differs from length");
    if (we.count(0) != 1) throw InternalError("A_0 != 1 for " + f.label());
    BigInt total = 0;
    for (int w = 0; w <= n; ++w) {
        const BigInt& a = we.poly[w];
        if (a != 0 && w % step != 0) throw InternalError("A_w nonzero off the weight grid for " + f.label());
        if (a != 0 && w > 0 && w < d) throw InternalError("A_w nonzero below minimum distance for " + f.label());
        total += a;
    }
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(field_size(f.type())),
                  static_cast<unsigned long>(n / 2));
    if (total != expected) throw InternalError("sum of A_w differs from q^(n/2) for " + f.label());
}

}  // namespace

BigInt WeightEnumerator::count(int w) const {
    if (w < 0 || w > static_cast<int>(poly.degree())) return 0;
    return poly[w];
}

std::vector<int> WeightEnumerator::negative_weights() const {
    std::vector<int> out;
    for (std::size_t w = 0; w <= poly.degree(); ++w)
        if (sgn(poly[w]) < 0) out.push_back(static_cast<int>(w));
    return out;
}

BigInt WeightEnumerator::total() const {
    BigInt s = 0;
    for (const auto& c : poly.coeffs()) s += c;
    return s;
}

WeightEnumerator extremal_weight_enumerator(const CodeFamily& f) {
    f.require_in_range();
    const Basis basis = basis_for(f.type());
    std::vector<BigRational> a = solve_gleason_coeffs(f, basis);

    // Rebuild W by Horner in the pair (B1^3, B2): S_i = S_{i-1} * B1^3 + a_i * B2^i, W = B1^r * S_m,
    // scaled by a common denominator so the polynomial work stays in integers.
    BigInt den = 1;
    for (const auto& ai : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ai.den().get_mpz_t());
    const HomoPoly cube = poly_pow(basis.first, 3);
    HomoPoly second_pow;  // B2^i
    HomoPoly acc = HomoPoly{} * (a[0].num() * (den / a[0].den()));
    for (std::size_t i = 1; i < a.size(); ++i) {
        second_pow = poly_mul(second_pow, basis.second);
        acc = poly_mul(acc, cube);
        acc += second_pow * (a[i].num() * (den / a[i].den()));
    }
    acc = poly_mul(poly_pow(basis.first, static_cast<unsigned>(f.residue_index())), acc);

    std::vector<BigInt> counts(acc.coeffs().begin(), acc.coeffs().end());
    for (auto& c : counts) c = exact_div(c, den);

    WeightEnumerator we{f, HomoPoly(std::move(counts)), std::move(a)};
    check_enumerator(we);
    return we;
}

BigInt min_weight_count(const CodeFamily& f) {
    f.require_in_range();
    const long m = f.m();
    switch (f.family()) {
        case Family::III_12m:
            return exact_div(2 * binom(12 * m, 5) * binom(4 * m - 2, m - 1), binom(3 * m + 3, 5));
        case Family::III_12m4:
            // (4m)!/(m!(3m+3)!) = binom(4m, m) / ((3m+1)(3m+2)(3m+3))
            return exact_div(BigInt(2) * (12 * m + 4) * (12 * m + 3) * (12 * m + 2) * binom(4 * m, m),
                             BigInt(3 * m + 1) * (3 * m + 2) * (3 * m + 3));
        case Family::III_12m8:
            // (4m+2)!/(m!(3m+3)!) = binom(4m+2, m) / (3m+3)
            return exact_div(BigInt(6) * (12 * m + 8) * binom(4 * m + 2, m), BigInt(3 * m + 3));
        case Family::IV_6m: {
            if (m < 2) throw UnsupportedCase("minimum-weight 5-design formula for length 6m needs m >= 2");
            const BigInt blocks = exact_div(binom(3 * m - 3, m - 2) * binom(6 * m, 5), binom(2 * m + 2, 5));
            return 3 * blocks;
        }
        case Family::IV_6m2:
            return exact_div(BigInt(3) * (6 * m + 1) * binom(3 * m + 1, m), BigInt(m + 1));
        case Family::IV_6m4:
            return 3 * binom(3 * m + 2, m + 1);
    }
    throw InternalError("unknown family");
}

DesignParams support_design_params(const CodeFamily& f) {
    f.require_in_range();
    const long m = f.m();
    BigInt lambda;
    switch (f.family()) {
        case Family::III_12m: lambda = binom(4 * m - 2, m - 1); break;
        case Family::III_12m4: lambda = binom(4 * m, m); break;
        case Family::III_12m8: lambda = 3 * binom(4 * m + 2, m); break;
        case Family::IV_6m:
            if (m < 2) throw UnsupportedCase("minimum-weight 5-design for length 6m needs m >= 2");
            lambda = binom(3 * m - 3, m - 2);
            break;
        case Family::IV_6m2: lambda = exact_div(binom(3 * m, m), 3); break;
        case Family::IV_6m4: lambda = binom(3 * m + 1, m); break;
    }
    const int scalars = field_size(f.type()) - 1;
    const BigInt blocks = exact_div(min_weight_count(f), scalars);
    const int v = f.length();
    const int k = f.min_distance();
    const int t = f.base_strength();
    // block-count identity: blocks * binom(k,t) / binom(v,t) must reproduce lambda
    if (BigRational(blocks * binom(k, t), binom(v, t)) != BigRational(lambda))
        throw InternalError("support design parameters inconsistent with block count for " + f.label());
    return DesignParams{v, k, t, lambda, blocks};
}

}  // namespace extremal
