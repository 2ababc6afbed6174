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

#include "extremal/homo_poly.hpp"

#include <ostream>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

HomoPoly HomoPoly::zero(std::size_t degree) { return HomoPoly(std::vector<BigInt>(degree + 1)); }

HomoPoly HomoPoly::monomial(std::size_t degree, std::size_t y_degree, const BigInt& c) {
    if (y_degree > degree) throw DomainError("monomial: y-degree exceeds total degree");
    std::vector<BigInt> v(degree + 1);
    v[y_degree] = c;
    return HomoPoly(std::move(v));
}

HomoPoly::HomoPoly(std::initializer_list<long> by_y_degree) {
    if (by_y_degree.size() == 0) throw DomainError("HomoPoly needs at least one coefficient");
    coeffs_.reserve(by_y_degree.size());
    for (long c : by_y_degree) coeffs_.emplace_back(c);
}

HomoPoly::HomoPoly(std::vector<BigInt> by_y_degree) : coeffs_(std::move(by_y_degree)) {
    if (coeffs_.empty()) throw DomainError("HomoPoly needs at least one coefficient");
}

bool HomoPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::size_t HomoPoly::lowest_y_degree() const {
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return j;
    return coeffs_.size();
}

std::size_t HomoPoly::highest_y_degree() const {
    for (std::size_t j = coeffs_.size(); j-- > 0;)
        if (coeffs_[j] != 0) return j;
    return 0;
}

HomoPoly& HomoPoly::operator+=(const HomoPoly& rhs) {
    if (rhs.degree() != degree()) throw DomainError("adding homogeneous polynomials of different degree");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

HomoPoly& HomoPoly::operator-=(const HomoPoly& rhs) {
    if (rhs.degree() != degree()) throw DomainError("subtracting homogeneous polynomials of different degree");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

HomoPoly& HomoPoly::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::string HomoPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    const std::size_t d = degree();
    for (std::size_t j = 0; j <= d; ++j) {
        const BigInt& c = coeffs_[j];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const std::size_t xe = d - j;
        const bool unit = (mag == 1) && (xe + j > 0);
        if (!unit) os << mag.get_str();
        auto var = [&](char v, std::size_t e, bool need_star) {
            if (e == 0) return;
            if (need_star) os << '*';
            os << v;
            if (e > 1) os << '^' << e;
        };
        var('x', xe, !unit);
        var('y', j, !unit || xe > 0);
    }
    if (first) os << '0';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomoPoly& p) { return os << p.to_string(); }

HomoPoly poly_mul(const HomoPoly& a, const HomoPoly& b) {
    std::vector<BigInt> out(a.degree() + b.degree() + 1);
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    // collect b's support once; most factors here are sparse on a step-2 or step-3 grid
    std::vector<std::size_t> bnz;
    bnz.reserve(bc.size());
    for (std::size_t j = 0; j < bc.size(); ++j)
        if (bc[j] != 0) bnz.push_back(j);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j : bnz) mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
    return HomoPoly(std::move(out));
}

HomoPoly poly_pow(const HomoPoly& a, unsigned e) {
    HomoPoly result;
    HomoPoly base = a;
    while (e > 0) {
        if (e & 1u) result = poly_mul(result, base);
        e >>= 1;
        if (e > 0) base = poly_mul(base, base);
    }
    return result;
}

const BigInt& coeff(const HomoPoly& p, std::size_t y_degree) {
    if (y_degree > p.degree())
        throw DomainError("coeff: y-degree " + std::to_string(y_degree) + " exceeds total degree " +
                          std::to_string(p.degree()));
    return p[y_degree];
}

}  // namespace extremal
