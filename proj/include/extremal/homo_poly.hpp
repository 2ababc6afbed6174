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

#ifndef EXTREMAL_HOMO_POLY_HPP
#define EXTREMAL_HOMO_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "extremal/bignum.hpp"

namespace extremal {

/*
   Homogeneous polynomial in x, y of a fixed total degree d, stored densely by y-degree:
   coeffs()[j] is the coefficient of x^(d-j) y^j, j = 0..d.

   Every polynomial appearing in weight-enumerator work is homogeneous, so the x-exponent is
   implied and never stored.
*/
class HomoPoly {
   public:
    /// The constant 1.
    HomoPoly() : coeffs_(1, BigInt(1)) {}
    /// All-zero polynomial of the given total degree.
    static HomoPoly zero(std::size_t degree);
    /// c * x^(degree - y_degree) * y^y_degree
    static HomoPoly monomial(std::size_t degree, std::size_t y_degree, const BigInt& c = 1);
    /// Coefficients listed by increasing y-degree; total degree is size() - 1.
    HomoPoly(std::initializer_list<long> by_y_degree);
    explicit HomoPoly(std::vector<BigInt> by_y_degree);

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const BigInt> coeffs() const { return coeffs_; }
    const BigInt& operator[](std::size_t y_degree) const { return coeffs_[y_degree]; }

    bool is_zero() const;
    /// Smallest y-degree with a nonzero coefficient; degree()+1 for the zero polynomial.
    std::size_t lowest_y_degree() const;
    /// Largest y-degree with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t highest_y_degree() const;

    HomoPoly& operator+=(const HomoPoly& rhs);
    HomoPoly& operator-=(const HomoPoly& rhs);
    HomoPoly& operator*=(const BigInt& scalar);

    friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }
    friend HomoPoly operator-(HomoPoly a, const HomoPoly& b) { return a -= b; }
    friend HomoPoly operator*(HomoPoly a, const BigInt& s) { return a *= s; }
    friend bool operator==(const HomoPoly&, const HomoPoly&) = default;

    /// e.g. "x^4 + 8*x*y^3"
    std::string to_string() const;

   private:
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HomoPoly& p);

/// Exact product; degrees add. Zero coefficients are skipped, so sparse factors are cheap.
HomoPoly poly_mul(const HomoPoly& a, const HomoPoly& b);
inline HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) { return poly_mul(a, b); }

/// a^e by binary powering; a^0 is the constant 1.
HomoPoly poly_pow(const HomoPoly& a, unsigned e);

/// Coefficient of x^(d-j) y^j; throws DomainError when j > d.
const BigInt& coeff(const HomoPoly& p, std::size_t y_degree);

}  // namespace extremal

#endif
