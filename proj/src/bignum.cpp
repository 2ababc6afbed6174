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

#include "extremal/bignum.hpp"

#include <ostream>

#include "extremal/errors.hpp"

namespace extremal {

BigInt parse_bigint(std::string_view decimal) {
    std::string s(decimal);
    if (s.empty()) throw DomainError("empty integer literal");
    BigInt r;
    if (r.set_str(s, 10) != 0) throw DomainError("malformed integer literal: " + s);
    return r;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.q_ = -q_;
    return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    q_ += rhs.q_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (sgn(rhs.q_) == 0) throw DomainError("division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::string BigRational::to_string() const { return q_.get_str(10); }

BigRational BigRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
    return BigRational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigInt binom(long n, long k) {
    if (k < 0) throw DomainError("binom: negative k = " + std::to_string(k));
    if (n < 0 || n < k) return 0;
    if (k > n - k) k = n - k;
    // running product stays integral: after step i it equals binom(n-k+i, i)
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw InternalError("exact_div: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InternalError("exact_div: " + to_string(b) + " does not divide " + to_string(a));
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_perfect_square(const BigInt& x) { return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

}  // namespace extremal
