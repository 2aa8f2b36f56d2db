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

#include "skein/elimination.hpp"

#include <algorithm>
#include <set>

#include "skein/error.hpp"

namespace skein {

NCPoly reflection_theta(const NCPoly& x, const Presentation& p) {
    const Presentation f = height_flipped(p);
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
        Word r;
        for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(f.letter(p.gen_of(*it), p.state_of(*it)));
        out.add_term(r, c.bar());
    }
    return out;
}

bool loop_identity_check(const Presentation& p, const std::vector<RelLetter>& word, const NCSystem& rs) {
    const PMat m = trivial_loop_matrix(p, word);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const NCPoly e = m(i, j) - (i == j ? NCPoly(1) : NCPoly());
            if (!rs.normal_form(e).is_zero()) return false;
        }
    return true;
}

namespace {

// Inverse of M or tM for a type a arc, from S(X) = C^-1 tX C.
PMat letter_inverse(const Presentation& p, const RelLetter& l) {
    const auto& k = constants();
    const PMat C = lift<NCPoly>(k.C), Ci = lift<NCPoly>(k.Cinv);
    if (p.generators[l.gen].type != ArcType::a)
        throw Error(ErrorCode::validation, "unsupported elimination: isolation needs the inverse of a non type a arc",
                    p.generators[l.gen].id);
    const PMat m = m_matrix(p, l.gen);
    return Ci * (l.inverse ? m : transpose(m)) * C;
}

}  // namespace

Elimination eliminate_generators(const Presentation& p, const std::vector<std::string>& choice) {
    if (choice.size() != p.relations.size())
        throw Error(ErrorCode::validation, "choose one generator per relation",
                    std::to_string(choice.size()) + " of " + std::to_string(p.relations.size()));
    const auto& k = constants();
    const PMat C = lift<NCPoly>(k.C), Ci = lift<NCPoly>(k.Cinv);

    std::vector<size_t> removed;
    for (const auto& id : choice) {
        const size_t g = p.index_of(id);
        if (std::find(removed.begin(), removed.end(), g) != removed.end())
            throw Error(ErrorCode::validation, "generator chosen twice", id);
        removed.push_back(g);
    }
    if (removed.size() >= p.generators.size())
        throw Error(ErrorCode::validation, "elimination would leave no generators");
    for (size_t r = 0; r < p.relations.size(); ++r)
        for (size_t s = 0; s < p.relations.size(); ++s) {
            const size_t hits = static_cast<size_t>(std::count_if(p.relations[s].begin(), p.relations[s].end(),
                                                                  [&](const RelLetter& l) { return l.gen == removed[r]; }));
            if (r == s && hits != 1)
                throw Error(ErrorCode::validation, "the chosen generator must occur exactly once in its relation",
                            choice[r]);
            if (r != s && hits != 0)
                throw Error(ErrorCode::validation, "unsupported elimination: the chosen generator occurs in another relation",
                            choice[r]);
        }

    // Matrices of removed generators over the input alphabet.
    std::vector<std::pair<size_t, PMat>> solved;
    for (size_t r = 0; r < p.relations.size(); ++r) {
        const auto& word = p.relations[r];  // beta_k ... beta_1
        const size_t j = static_cast<size_t>(
            std::find_if(word.begin(), word.end(), [&](const RelLetter& l) { return l.gen == removed[r]; }) -
            word.begin());
        for (const auto& l : word)
            if (l.gen != removed[r] && std::find(removed.begin(), removed.end(), l.gen) != removed.end())
                throw Error(ErrorCode::validation, "unsupported elimination: relation mixes removed generators",
                            p.generators[l.gen].id);
        // C M_k C^-1 ... M_(j) ... C^-1 M_1 = I, so M_(j) = P^-1 Q^-1 with
        // P the part left of the letter (ending in C^-1) and Q the part right.
        PMat pinv = C;
        for (size_t i = j; i-- > 0;) {
            pinv = pinv * letter_inverse(p, word[i]);
            pinv = pinv * (i == 0 ? Ci : C);
        }
        if (j == 0) pinv = Ci;
        PMat qinv = PMat::identity(2);
        for (size_t i = word.size(); i-- > j + 1;) {
            qinv = qinv * letter_inverse(p, word[i]);
            qinv = qinv * C;
        }
        PMat x = pinv * qinv;
        if (word[j].inverse) x = transpose(x);
        solved.emplace_back(removed[r], std::move(x));
    }

    Elimination e;
    e.reduced = drop_generators(p, removed);
    for (size_t g : removed) e.removed.push_back(p.generators[g].id);
    e.relabel.resize(p.letters());
    for (size_t g = 0; g < p.generators.size(); ++g) {
        if (std::find(removed.begin(), removed.end(), g) != removed.end()) continue;
        const size_t ng = e.reduced.index_of(p.generators[g].id);
        for (int s = 0; s < 4; ++s) e.relabel[p.letter(g, s)] = e.reduced.letter(ng, s);
    }
    e.substitution.resize(p.letters());
    for (const auto& [g, m] : solved)
        for (int s = 0; s < 4; ++s) e.substitution[p.letter(g, s)] = transport(e, m(s & 1, s >> 1));
    return e;
}

NCPoly transport(const Elimination& e, const NCPoly& x) {
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
        NCPoly term(c);
        for (Letter l : w) {
            if (l < e.substitution.size() && e.substitution[l])
                term = term * *e.substitution[l];
            else if (l < e.relabel.size() && e.relabel[l])
                term = term * NCPoly::letter(*e.relabel[l]);
            else
                throw Error(ErrorCode::validation, "letter outside the eliminated presentation", std::to_string(l));
        }
        out += term;
    }
    return out;
}

std::vector<std::string> transported_failures(const Presentation& p, const Elimination& e) {
    Presentation free = p;
    free.relations.clear();
    const NCSystem big = build_rewrite_system(free);
    const NCSystem small = build_rewrite_system(e.reduced);
    const Alphabet ab = p.alphabet();
    std::vector<std::string> failures;
    for (const auto& r : big.rules())
        if (!small.normal_form(transport(e, r.relator())).is_zero()) failures.push_back(word_text(r.lead, ab));
    return failures;
}

}  // namespace skein
