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

#include "skein/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

const char* code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::validation: return "validation";
        case ErrorCode::derivation: return "derivation";
        case ErrorCode::certification: return "certification";
        case ErrorCode::parse: return "parse";
    }
    return "unknown";
}

Laurent::Laurent(long n) {
    if (n != 0) c_.emplace_back(n);
}

Laurent::Laurent(const mpz_class& n) {
    if (n != 0) c_.push_back(n);
}

Laurent Laurent::monomial(const mpz_class& coeff, int exponent) {
    Laurent r;
    if (coeff != 0) {
        r.lo_ = exponent;
        r.c_.push_back(coeff);
    }
    return r;
}

mpz_class Laurent::coeff(int exponent) const {
    if (c_.empty() || exponent < lo_ || exponent > high()) return 0;
    return c_[exponent - lo_];
}

void Laurent::trim() {
    size_t first = 0;
    while (first < c_.size() && c_[first] == 0) ++first;
    if (first == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    size_t last = c_.size();
    while (c_[last - 1] == 0) --last;
    if (first > 0 || last < c_.size()) {
        c_ = std::vector<mpz_class>(c_.begin() + first, c_.begin() + last);
        lo_ += static_cast<int>(first);
    }
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    int lo = std::min(lo_, rhs.lo_);
    int hi = std::max(high(), rhs.high());
    if (lo != lo_ || hi != high()) {
        std::vector<mpz_class> c(hi - lo + 1);
        for (size_t k = 0; k < c_.size(); ++k) c[lo_ - lo + k] = std::move(c_[k]);
        c_ = std::move(c);
        lo_ = lo;
    }
    for (size_t k = 0; k < rhs.c_.size(); ++k) c_[rhs.lo_ - lo_ + k] += rhs.c_[k];
    trim();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) { return *this += -rhs; }

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Laurent r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    r.trim();
    return r;
}

Laurent& Laurent::operator*=(const Laurent& rhs) { return *this = *this * rhs; }

Laurent Laurent::shifted(int k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

Laurent Laurent::pow(int n) const {
    if (n < 0) {
        if (!is_monomial() || (c_[0] != 1 && c_[0] != -1))
            throw Error(ErrorCode::validation, "negative power of a non-unit Laurent polynomial", str());
        Laurent r = monomial(c_[0], -lo_);
        return r.pow(-n);
    }
    Laurent r(1), base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    if (is_zero()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.lo_ = -high();
    return r;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return Laurent{};
    // Both are w^k times a polynomial with nonzero constant term; the quotient
    // of those polynomials, if exact, is again a polynomial.
    std::vector<mpz_class> rem = c_;
    const auto& q = d.c_;
    if (rem.size() < q.size()) return std::nullopt;
    size_t n = rem.size() - q.size() + 1;
    std::vector<mpz_class> quot(n);
    for (size_t k = n; k-- > 0;) {
        mpz_class& top = rem[k + q.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), q.back().get_mpz_t())) return std::nullopt;
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), q.back().get_mpz_t());
        for (size_t j = 0; j < q.size(); ++j) rem[k + j] -= t * q[j];
        quot[k] = t;
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    Laurent r;
    r.c_ = std::move(quot);
    r.lo_ = lo_ - d.lo_;
    r.trim();
    return r;
}

mpq_class Laurent::evaluate(const mpq_class& w0) const {
    if (w0 == 0) throw Error(ErrorCode::validation, "evaluation at w = 0 is undefined", str());
    mpq_class acc = 0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * w0 + mpq_class(c_[k]);
    mpq_class scale = 1;
    mpq_class base = lo_ >= 0 ? w0 : mpq_class(1) / w0;
    for (int k = 0; k < std::abs(lo_); ++k) scale *= base;
    acc *= scale;
    acc.canonicalize();
    return acc;
}

mpz_class Laurent::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

namespace {

using Poly = std::vector<mpz_class>;

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(Poly& p) {
    mpz_class g = 0;
    for (const auto& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b).
Poly pseudo_rem(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class la = a.back(), lb = b.back();
        size_t shift = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        strip(a);
    }
    return a;
}

}  // namespace

Laurent gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return {};
    Poly x = a.coeffs(), y = b.coeffs();
    if (x.size() < y.size()) std::swap(x, y);
    make_primitive(x);
    make_primitive(y);
    while (!y.empty()) {
        Poly r = pseudo_rem(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty() && x.back() < 0)
        for (auto& c : x) c = -c;
    Laurent g;
    for (size_t k = 0; k < x.size(); ++k) g += Laurent::monomial(x[k], static_cast<int>(k));
    return g;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        const mpz_class& c = c_[k];
        if (c == 0) continue;
        int e = lo_ + static_cast<int>(k);
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'w';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& x) { return os << x.str(); }

namespace {

struct LaurentReader {
    std::string_view s;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char ch) {
        ws();
        if (i < s.size() && s[i] == ch) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::parse, what + " at offset " + std::to_string(i), std::string(s));
    }
    long integer() {
        ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return std::stol(std::string(s.substr(start, i - start)));
    }
    // term := [digits ['*']] ['w' ['^' int]]
    Laurent term() {
        ws();
        mpz_class c = 1;
        bool have_num = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            c = mpz_class(std::string(s.substr(start, i - start)));
            have_num = true;
            if (!eat('*')) return Laurent(c);
        }
        if (!eat('w')) {
            if (have_num) fail("expected 'w' after '*'");
            fail("expected term");
        }
        int e = 1;
        if (eat('^')) e = static_cast<int>(integer());
        return Laurent::monomial(c, e);
    }
};

}  // namespace

Laurent Laurent::parse(std::string_view text) {
    LaurentReader r{text};
    Laurent acc;
    bool neg = r.eat('-');
    if (!neg) r.eat('+');
    acc += neg ? -r.term() : r.term();
    for (;;) {
        r.ws();
        if (r.i >= text.size()) break;
        if (r.eat('+'))
            acc += r.term();
        else if (r.eat('-'))
            acc -= r.term();
        else
            r.fail("unexpected character");
    }
    return acc;
}

}  // namespace skein
