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

#include "skein/relators.hpp"

#include <algorithm>

#include "skein/error.hpp"
#include "skein/linsolve.hpp"

namespace skein {

namespace {

struct RuleBuilder {
    const Presentation& p;
    size_t g;

    Word w(int s, int t) const { return Word{p.letter(g, s), p.letter(g, t)}; }
    NCPoly m(const Laurent& c, int s, int t) const { return NCPoly::word(w(s, t), c); }
};

const Laurent q = q_(), qi = q_(-1), q2 = q_(2), A = A_(), Ai = A_(-1), A3 = A_(3);
const Laurent dq = q - qi;

}  // namespace

std::vector<NCRule> same_generator_relators(const Presentation& p, size_t gen) {
    RuleBuilder b{p, gen};
    std::vector<NCRule> r;
    switch (p.generators[gen].type) {
        case ArcType::a:
            r.push_back({b.w(pm, pp), b.m(q, pp, pm)});
            r.push_back({b.w(mp, pp), b.m(q, pp, mp)});
            r.push_back({b.w(mm, pm), b.m(q, pm, mm)});
            r.push_back({b.w(mm, mp), b.m(q, mp, mm)});
            r.push_back({b.w(pm, mp), b.m(q, pp, mm) - NCPoly(q)});
            r.push_back({b.w(mp, pm), b.m(q, pp, mm) - NCPoly(q)});
            r.push_back({b.w(mm, pp), b.m(q2, pp, mm) + NCPoly(Laurent(1) - q2)});
            break;
        case ArcType::d:
            r.push_back({b.w(pm, pp), b.m(1, pp, pm) + b.m(dq * q2, pp, mp)});
            r.push_back({b.w(pm, mp), b.m(1, pp, mm) + b.m(dq, mp, mp) - NCPoly(A)});
            r.push_back({b.w(mp, pp), b.m(q2, pp, mp)});
            r.push_back({b.w(mp, pm), b.m(1, pp, mm) + b.m(dq, mp, mp) - NCPoly(A)});
            r.push_back({b.w(mm, pp), b.m(q2, pp, mm) + b.m(q2 * dq, mp, mp) + NCPoly(A * (Laurent(1) - q2))});
            r.push_back({b.w(mm, pm), b.m(1, pm, mm) + b.m(dq * q2, mp, mm)});
            r.push_back({b.w(mm, mp), b.m(q2, mp, mm)});
            break;
        case ArcType::c:
            r.push_back({b.w(pm, pp), b.m(1, pp, pm) + b.m(dq, pp, mp)});
            r.push_back({b.w(pm, mp), b.m(q2, pp, mm) - NCPoly(A3)});
            r.push_back({b.w(mp, pp), b.m(q2, pp, mp)});
            r.push_back({b.w(mp, pm), b.m(q2, pp, mm) - NCPoly(A3)});
            r.push_back({b.w(mm, pp), b.m(q2, pp, mm) + b.m(dq, mp, mp) + NCPoly(Ai * (Laurent(1) - q2))});
            r.push_back({b.w(mm, pm), b.m(1, pm, mm) + b.m(dq, mp, mm)});
            r.push_back({b.w(mm, mp), b.m(q2, mp, mm)});
            break;
        default:
            throw Error(ErrorCode::validation, "same-generator relators need a type a, c or d generator",
                        p.generators[gen].id);
    }
    return r;
}

ExchangeDerivation exchange_relators(const Presentation& p, size_t big, size_t small) {
    if (p.generators[big].order_index <= p.generators[small].order_index)
        throw Error(ErrorCode::validation, "exchange relators expect the larger generator first",
                    p.generators[big].id + ", " + p.generators[small].id);
    ExchangeDerivation d{match_configuration(p, big, small), {}, {}, {}};
    std::tie(d.lhs, d.rhs) = case_equation(d.match);

    // Unknown products: u = big-first words, v = small-first words.
    std::vector<Word> u, v;
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
            u.push_back(Word{p.letter(big, s), p.letter(small, t)});
            v.push_back(Word{p.letter(small, s), p.letter(big, t)});
        }
    std::sort(u.begin(), u.end(), WordLess{});
    std::sort(v.begin(), v.end(), WordLess{});
    auto col = [](const std::vector<Word>& ws, const Word& w) -> std::optional<size_t> {
        auto it = std::lower_bound(ws.begin(), ws.end(), w, WordLess{});
        if (it == ws.end() || *it != w) return std::nullopt;
        return static_cast<size_t>(it - ws.begin());
    };
    LMat tl(16, 16), tr(16, 16);
    for (size_t e = 0; e < 16; ++e) {
        NCPoly eq = d.lhs(e / 4, e % 4) - d.rhs(e / 4, e % 4);
        for (const auto& [w, c] : eq.terms()) {
            if (auto k = col(u, w))
                tl(e, *k) += c;
            else if (auto k2 = col(v, w))
                tr(e, *k2) -= c;
            else
                throw Error(ErrorCode::derivation, "case equation produced a non-bilinear term",
                            word_text(w, p.alphabet()));
        }
    }
    Solution s = solve_fraction_free(tl, tr);
    if (!s.exact)
        throw Error(ErrorCode::derivation, "exchange coefficients are not Laurent polynomials",
                    p.generators[big].id + ", " + p.generators[small].id + " case " + case_name(d.match.kase));
    for (size_t k = 0; k < 16; ++k) {
        NCPoly rhs;
        for (size_t j = 0; j < 16; ++j) rhs.add_term(v[j], (*s.exact)(k, j));
        d.rules.push_back({u[k], std::move(rhs)});
    }
    return d;
}

bool back_substitution_holds(const ExchangeDerivation& d) {
    for (size_t e = 0; e < 16; ++e) {
        NCPoly eq = d.lhs(e / 4, e % 4) - d.rhs(e / 4, e % 4);
        NCPoly out;
        for (const auto& [w, c] : eq.terms()) {
            auto it = std::find_if(d.rules.begin(), d.rules.end(), [&](const NCRule& r) { return r.lead == w; });
            if (it == d.rules.end())
                out.add_term(w, c);
            else
                out += c * it->rhs;
        }
        if (!out.is_zero()) return false;
    }
    return true;
}

NCPoly qdet_relator(const Presentation& p, size_t gen) {
    const ArcType t = p.generators[gen].type;
    if (t == ArcType::a) {
        PMat n = m_matrix(p, gen);
        return n(0, 0) * n(1, 1) - qi * (n(0, 1) * n(1, 0)) - NCPoly(1);
    }
    if (t == ArcType::d) {
        PMat n = n_from_m(t, m_matrix(p, gen));
        return n(0, 0) * n(1, 1) - q_(-2) * (n(0, 1) * n(1, 0)) - NCPoly(1);
    }
    if (t == ArcType::c) {
        // For N = M tC the identity holds with the factors in the other order.
        PMat n = n_from_m(t, m_matrix(p, gen));
        return n(1, 1) * n(0, 0) - q2 * (n(0, 1) * n(1, 0)) - NCPoly(1);
    }
    throw Error(ErrorCode::validation, "q-determinant needs a type a, c or d generator", p.generators[gen].id);
}

PMat trivial_loop_matrix(const Presentation& p, const std::vector<RelLetter>& word) {
    const auto& k = constants();
    const PMat C = lift<NCPoly>(k.C), Ci = lift<NCPoly>(k.Cinv);
    if (word.empty()) throw Error(ErrorCode::validation, "empty loop word");
    PMat out = C;
    for (size_t i = 0; i < word.size(); ++i) {
        const RelLetter& l = word[i];
        const ArcType t = p.generators[l.gen].type;
        if (t != ArcType::a && t != ArcType::d)
            throw Error(ErrorCode::validation, "trivial loops need letters of type a or d", p.generators[l.gen].id);
        if (l.inverse && t != ArcType::a)
            throw Error(ErrorCode::validation, "inverse letters must be of type a", p.generators[l.gen].id);
        PMat m = m_matrix(p, l.gen);
        if (l.inverse) m = transpose(m);
        if (i) out = out * Ci;
        out = out * m;
    }
    return out;
}

NCSystem build_rewrite_system(const Presentation& p) {
    std::vector<NCRule> rules;
    for (size_t g = 0; g < p.generators.size(); ++g) {
        auto r = same_generator_relators(p, g);
        rules.insert(rules.end(), r.begin(), r.end());
    }
    for (size_t big = 1; big < p.generators.size(); ++big)
        for (size_t small = 0; small < big; ++small) {
            auto d = exchange_relators(p, big, small);
            rules.insert(rules.end(), d.rules.begin(), d.rules.end());
        }
    std::sort(rules.begin(), rules.end(), [](const NCRule& a, const NCRule& b) { return WordLess{}(a.lead, b.lead); });
    return NCSystem(p.alphabet(), std::move(rules));
}

NCPoly substitute(const NCPoly& x, const std::vector<std::optional<NCPoly>>& sub) {
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
        NCPoly term(c);
        for (Letter l : w) term = term * (l < sub.size() && sub[l] ? *sub[l] : NCPoly::letter(l));
        out += term;
    }
    return out;
}

}  // namespace skein
