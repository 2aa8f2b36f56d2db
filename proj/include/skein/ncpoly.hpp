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

#ifndef SKEIN_NCPOLY_HPP
#define SKEIN_NCPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

// Length first, then lexicographic in letter order.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const noexcept {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline bool is_zero(const Laurent& x) { return x.is_zero(); }
inline bool is_zero(const mpq_class& x) { return x == 0; }
inline std::string to_text(const Laurent& x) { return x.str(); }
inline std::string to_text(const mpq_class& x) { return x.get_str(); }

/*
    Element of the free algebra over K on letters 0..n-1. Leftmost letter of a
    word is the leftmost (topmost) factor.
*/
template <class K>
class Poly {
   public:
    using Terms = std::map<Word, K, WordLess>;

    Poly() = default;
    Poly(long n) : Poly(K(n)) {}  // NOLINT
    Poly(const K& c) {            // NOLINT
        if (!skein::is_zero(c)) t_.emplace(Word{}, c);
    }
    static Poly letter(Letter x, const K& c = K(1)) { return word(Word{x}, c); }
    static Poly word(Word w, const K& c = K(1)) {
        Poly p;
        if (!skein::is_zero(c)) p.t_.emplace(std::move(w), c);
        return p;
    }

    const Terms& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    size_t size() const noexcept { return t_.size(); }
    K coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? K() : it->second;
    }
    size_t degree() const { return t_.empty() ? 0 : t_.rbegin()->first.size(); }

    void add_term(const Word& w, const K& c) {
        if (skein::is_zero(c)) return;
        auto [it, fresh] = t_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (skein::is_zero(it->second)) t_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [w, c] : o.t_) add_term(w, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [w, c] : o.t_) add_term(w, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [wa, ca] : a.t_)
            for (const auto& [wb, cb] : b.t_) {
                Word w;
                w.reserve(wa.size() + wb.size());
                w.insert(w.end(), wa.begin(), wa.end());
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const K& s, const Poly& p) {
        Poly r;
        if (skein::is_zero(s)) return r;
        for (const auto& [w, c] : p.t_) r.add_term(w, s * c);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

    template <class F, class R = std::decay_t<std::invoke_result_t<F, const K&>>>
    Poly<R> map_coeffs(F f) const {
        Poly<R> r;
        for (const auto& [w, c] : t_) r.add_term(w, f(c));
        return r;
    }

   private:
    Terms t_;
};

using NCPoly = Poly<Laurent>;
using QPoly = Poly<mpq_class>;

// Letter names used for printing and parsing.
struct Alphabet {
    std::vector<std::string> names;
    size_t size() const noexcept { return names.size(); }
};

std::string word_text(const Word& w, const Alphabet& ab);

template <class K>
std::string poly_text(const Poly<K>& p, const Alphabet& ab) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    // Descending word order, so leading words come first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        std::string coeff = to_text(c);
        bool neg = false;
        bool compound = coeff.find_first_of("+ ", 1) != std::string::npos;
        if (!compound && coeff[0] == '-') {
            neg = true;
            coeff = coeff.substr(1);
        }
        if (!first) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        first = false;
        if (w.empty()) {
            out += compound ? "(" + coeff + ")" : coeff;
            continue;
        }
        if (coeff != "1") out += (compound ? "(" + coeff + ")" : coeff) + "*";
        out += word_text(w, ab);
    }
    return out;
}

QPoly specialize(const NCPoly& p, const mpq_class& w0);

}  // namespace skein

#endif
