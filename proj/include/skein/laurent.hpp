/*
   Copyright 2025 The skeinpres authors

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

#ifndef SKEIN_LAURENT_HPP
#define SKEIN_LAURENT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skein {

/*
    Element of Z[w, w^-1]. Dense storage: coefficient c_[k] multiplies
    w^(lo_ + k). Zero is the empty vector. Leading and trailing
    coefficients are never zero.
*/
class Laurent {
   public:
    Laurent() = default;
    Laurent(long n);  // NOLINT: integers embed implicitly
    Laurent(const mpz_class& n);

    static Laurent monomial(const mpz_class& coeff, int exponent);
    static Laurent w(int exponent) { return monomial(1, exponent); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monomial() const noexcept { return c_.size() == 1; }
    bool is_one() const noexcept { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }
    int low() const noexcept { return lo_; }
    int high() const noexcept { return lo_ + static_cast<int>(c_.size()) - 1; }
    mpz_class coeff(int exponent) const;
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }

    Laurent& operator+=(const Laurent& rhs);
    Laurent& operator-=(const Laurent& rhs);
    Laurent& operator*=(const Laurent& rhs);
    Laurent operator-() const;

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) noexcept {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }

    // Multiply by w^k.
    Laurent shifted(int k) const;
    Laurent pow(int n) const;

    // w -> w^-1 on coefficients.
    Laurent bar() const;

    // Exact quotient, or nothing when d does not divide *this in Z[w^+-1].
    std::optional<Laurent> divide_exact(const Laurent& d) const;

    // Value at a rational point; w0 = 0 is rejected.
    mpq_class evaluate(const mpq_class& w0) const;

    // Integer content and normalization helpers for kernel vectors.
    mpz_class content() const;

    std::string str() const;
    static Laurent parse(std::string_view text);

   private:
    void trim();

    int lo_ = 0;
    std::vector<mpz_class> c_;
};

// gcd in Q[w^+-1] scaled to a primitive integer polynomial with positive
// leading coefficient and lowest exponent 0. gcd(0, 0) = 0.
Laurent gcd(const Laurent& a, const Laurent& b);

std::ostream& operator<<(std::ostream& os, const Laurent& x);

// Frequently used constants: A = w^-2, q = w^-4.
inline Laurent A_(int k = 1) { return Laurent::w(-2 * k); }
inline Laurent q_(int k = 1) { return Laurent::w(-4 * k); }

}  // namespace skein

#endif
