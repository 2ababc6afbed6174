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

#ifndef EXTREMAL_BIGNUM_HPP
#define EXTREMAL_BIGNUM_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace extremal {

/// Arbitrary precision signed integer.
using BigInt = mpz_class;

BigInt parse_bigint(std::string_view decimal);
std::string to_string(const BigInt& x);

/// Exact quotient of two big integers, always in lowest terms with a positive denominator.
class BigRational {
   public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}
    BigRational(const BigInt& v) : q_(v) {}
    BigRational(const BigInt& num, const BigInt& den);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_positive_integer() const { return is_integer() && sgn(q_) > 0; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or just "p" when integral.
    std::string to_string() const;
    static BigRational parse(std::string_view text);

   private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// Binomial coefficient with the convention binom(n, k) = 0 for n < k (including n < 0).
/// Throws DomainError for k < 0.
BigInt binom(long n, long k);

/// Exact quotient a / b; throws InternalError if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

bool is_perfect_square(const BigInt& x);

}  // namespace extremal

#endif
