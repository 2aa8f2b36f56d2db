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

#ifndef SKEIN_REWRITE_HPP
#define SKEIN_REWRITE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skein/error.hpp"
#include "skein/ncpoly.hpp"

namespace skein {

inline constexpr size_t default_guard = 1000000;

template <class K>
struct Rule {
    Word lead;  // length 2
    Poly<K> rhs;

    Poly<K> relator() const { return Poly<K>::word(lead) - rhs; }
};

/*
    Quadratic rewriting system: every rule rewrites a length-2 word to a
    combination of strictly smaller words. Reduction always rewrites the
    largest reducible word at its leftmost reducible position.
*/
template <class K>
class RewriteSystem {
   public:
    RewriteSystem() = default;
    RewriteSystem(Alphabet alphabet, std::vector<Rule<K>> rules) : ab_(std::move(alphabet)), rules_(std::move(rules)) {
        index();
    }

    const Alphabet& alphabet() const noexcept { return ab_; }
    const std::vector<Rule<K>>& rules() const noexcept { return rules_; }
    size_t letters() const noexcept { return ab_.size(); }

    const Rule<K>* rule_for(Letter x, Letter y) const {
        int k = table_[static_cast<size_t>(x) * ab_.size() + y];
        return k < 0 ? nullptr : &rules_[k];
    }
    bool is_leading(Letter x, Letter y) const { return rule_for(x, y) != nullptr; }

    std::optional<size_t> reducible_at(const Word& w) const {
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (is_leading(w[i], w[i + 1])) return i;
        return std::nullopt;
    }
    bool is_normal(const Word& w) const { return !reducible_at(w); }

    Poly<K> normal_form(const Poly<K>& x, size_t guard = default_guard) const {
        typename Poly<K>::Terms pending = x.terms();
        Poly<K> done;
        size_t steps = 0;
        while (!pending.empty()) {
            auto last = std::prev(pending.end());
            Word w = last->first;
            K c = std::move(last->second);
            pending.erase(last);
            auto pos = reducible_at(w);
            if (!pos) {
                done.add_term(w, c);
                continue;
            }
            if (++steps > guard)
                throw Error(ErrorCode::derivation, "normal form step guard exceeded", std::to_string(guard) + " steps");
            const Rule<K>& r = *rule_for(w[*pos], w[*pos + 1]);
            for (const auto& [rw, rc] : r.rhs.terms()) {
                Word nw;
                nw.reserve(w.size() - 2 + rw.size());
                nw.insert(nw.end(), w.begin(), w.begin() + *pos);
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), w.begin() + *pos + 2, w.end());
                K nc = c * rc;
                if (is_zero(nc)) continue;
                auto [it, fresh] = pending.try_emplace(std::move(nw), nc);
                if (!fresh) {
                    it->second += nc;
                    if (is_zero(it->second)) pending.erase(it);
                }
            }
        }
        return done;
    }

    Poly<K> multiply(const Poly<K>& x, const Poly<K>& y, size_t guard = default_guard) const {
        return normal_form(x * y, guard);
    }

    // Replace one rule's right-hand side (used for negative controls).
    RewriteSystem with_rule(const Word& lead, Poly<K> rhs) const {
        RewriteSystem r = *this;
        for (auto& rule : r.rules_)
            if (rule.lead == lead) rule.rhs = std::move(rhs);
        return r;
    }

    // Normal words of length n.
    mpz_class graded_dimension(size_t n) const {
        const size_t g = ab_.size();
        if (n == 0) return 1;
        std::vector<mpz_class> cnt(g, 1), next(g);
        for (size_t len = 2; len <= n; ++len) {
            for (size_t y = 0; y < g; ++y) {
                next[y] = 0;
                for (size_t x = 0; x < g; ++x)
                    if (!is_leading(static_cast<Letter>(x), static_cast<Letter>(y))) next[y] += cnt[x];
            }
            std::swap(cnt, next);
        }
        mpz_class total = 0;
        for (const auto& c : cnt) total += c;
        return total;
    }

    // All normal words of length <= n in increasing order.
    std::vector<Word> normal_words(size_t n) const {
        std::vector<Word> out{Word{}};
        std::vector<Word> layer{Word{}};
        for (size_t len = 1; len <= n; ++len) {
            std::vector<Word> nl;
            for (const auto& w : layer)
                for (size_t x = 0; x < ab_.size(); ++x) {
                    if (!w.empty() && is_leading(w.back(), static_cast<Letter>(x))) continue;
                    Word v = w;
                    v.push_back(static_cast<Letter>(x));
                    nl.push_back(std::move(v));
                }
            std::sort(nl.begin(), nl.end(), WordLess{});
            out.insert(out.end(), nl.begin(), nl.end());
            layer = std::move(nl);
        }
        return out;
    }

   private:
    void index() {
        const size_t g = ab_.size();
        table_.assign(g * g, -1);
        for (size_t k = 0; k < rules_.size(); ++k) {
            const Word& l = rules_[k].lead;
            if (l.size() != 2 || l[0] >= g || l[1] >= g)
                throw Error(ErrorCode::validation, "rule leading word must have length 2", word_text(l, ab_));
            int& slot = table_[static_cast<size_t>(l[0]) * g + l[1]];
            if (slot >= 0) throw Error(ErrorCode::validation, "duplicate leading word", word_text(l, ab_));
            for (const auto& [w, c] : rules_[k].rhs.terms())
                if (!WordLess{}(w, l))
                    throw Error(ErrorCode::validation, "rule right-hand side is not smaller than its leading word",
                                word_text(l, ab_));
            slot = static_cast<int>(k);
        }
    }

    Alphabet ab_;
    std::vector<Rule<K>> rules_;
    std::vector<int> table_;
};

using NCSystem = RewriteSystem<Laurent>;
using QSystem = RewriteSystem<mpq_class>;

struct ConfluenceFailure {
    Word triple;
    std::string left, right;
};

struct ConfluenceReport {
    size_t generators = 0;
    size_t relators = 0;
    size_t critical_triples = 0;
    std::vector<ConfluenceFailure> failures;
};

// Diamond lemma check over all overlaps xyz with xy and yz leading.
template <class K>
ConfluenceReport certify_confluence(const RewriteSystem<K>& rs, size_t guard = default_guard) {
    ConfluenceReport rep;
    rep.generators = rs.letters();
    rep.relators = rs.rules().size();
    for (const auto& r1 : rs.rules()) {
        const Letter x = r1.lead[0], y = r1.lead[1];
        for (size_t z = 0; z < rs.letters(); ++z) {
            const Rule<K>* r2 = rs.rule_for(y, static_cast<Letter>(z));
            if (!r2) continue;
            ++rep.critical_triples;
            Poly<K> left = r1.rhs * Poly<K>::letter(static_cast<Letter>(z));
            Poly<K> right = Poly<K>::letter(x) * r2->rhs;
            Poly<K> nl = rs.normal_form(left, guard), nr = rs.normal_form(right, guard);
            if (!(nl == nr))
                rep.failures.push_back({Word{x, y, static_cast<Letter>(z)}, poly_text(nl, rs.alphabet()),
                                        poly_text(nr, rs.alphabet())});
        }
    }
    return rep;
}

// Coefficient of t^n in (sum_k (k+1)^2 t^k)^g.
mpz_class convolution_dimension(size_t generators, size_t n);

// Specialize every rule coefficient at w = w0.
QSystem specialize(const NCSystem& rs, const mpq_class& w0);

}  // namespace skein

#endif
