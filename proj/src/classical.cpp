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

#include "skein/classical.hpp"

#include <functional>

#include "skein/error.hpp"

namespace skein {

SpinFunction spin_from_map(const Presentation& p, const std::map<std::string, int>& w) {
    SpinFunction s(p.generators.size(), 0);
    for (const auto& [id, v] : w) s[p.index_of(id)] = ((v % 2) + 2) % 2;
    return s;
}

bool validate_spin(const Presentation& p, const SpinFunction& w) {
    if (w.size() != p.generators.size())
        throw Error(ErrorCode::validation, "spin function must cover every generator");
    for (const auto& r : p.relations) {
        int total = 0;
        for (const auto& l : r) total += w[l.gen];
        if (total % 2 != 1) return false;
    }
    return true;
}

namespace {

PMat scaled_matrix(const LMat& k, const Laurent& c) {
    PMat out(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = NCPoly(c * k(i, j));
    return out;
}

Laurent sign(int w) { return w % 2 ? Laurent(-1) : Laurent(1); }

std::vector<std::optional<NCPoly>> table(const Presentation& p, const std::function<PMat(size_t)>& f) {
    std::vector<std::optional<NCPoly>> t(p.letters());
    for (size_t g = 0; g < p.generators.size(); ++g) {
        const PMat m = f(g);
        for (int s = 0; s < 4; ++s) t[p.letter(g, s)] = m(s & 1, s >> 1);
    }
    return t;
}

}  // namespace

UForm::UForm(const Presentation& p, SpinFunction w) : p_(p), w_(std::move(w)) {
    if (w_.size() != p.generators.size()) throw Error(ErrorCode::validation, "spin function must cover every generator");
    for (const auto& g : p.generators)
        if (g.type != ArcType::a && g.type != ArcType::d)
            throw Error(ErrorCode::validation, "U-generators need arcs of type a or d", g.id);
    to_u_ = table(p_, [&](size_t g) { return m_in_u(g); });
    to_m_ = table(p_, [&](size_t g) { return u_in_m(g); });
}

PMat UForm::u_in_m(size_t gen) const {
    const Laurent c = sign(w_[gen]) * (p_.generators[gen].type == ArcType::a ? Laurent::w(1) : Laurent(1));
    return scaled_matrix(constants().Cinv, c) * m_matrix(p_, gen);
}

PMat UForm::m_in_u(size_t gen) const {
    const Laurent c = sign(w_[gen]) * (p_.generators[gen].type == ArcType::a ? Laurent::w(-1) : Laurent(1));
    return scaled_matrix(constants().C, c) * m_matrix(p_, gen);
}

NCPoly UForm::to_u(const NCPoly& x) const { return substitute(x, to_u_); }
NCPoly UForm::to_m(const NCPoly& x) const { return substitute(x, to_m_); }

NCPoly UForm::qdet(size_t gen) const {
    const PMat u = m_matrix(p_, gen);
    const Laurent q = p_.generators[gen].type == ArcType::a ? q_(-1) : q_(-2);
    return u(0, 0) * u(1, 1) - q * (u(0, 1) * u(1, 0)) - NCPoly(1);
}

PMat UForm::loop(const std::vector<RelLetter>& word) const {
    PMat out = PMat::identity(2);
    int l = 0;
    for (const auto& x : word) {
        if (x.inverse) throw Error(ErrorCode::validation, "U-form loops take no inverse letters", p_.generators[x.gen].id);
        if (p_.generators[x.gen].type == ArcType::a) ++l;
        out = out * m_matrix(p_, x.gen);
    }
    const Laurent target = A_(3) * Laurent::w(l);
    for (int i = 0; i < 2; ++i) out(i, i) = out(i, i) - NCPoly(target);
    return out;
}

bool UForm::exchange_shape_holds(const NCSystem& rs, size_t big, size_t small) const {
    Match m = match_configuration(p_, big, small);
    for (ArcView* v : {&m.alpha, &m.beta}) {
        if (!v->moves.empty())
            throw Error(ErrorCode::validation, "U-form exchange check needs a match without moves", m.recipe());
        // Choose m so that the dressed matrix n() equals U.
        const PMat u = u_in_m(v->gen);
        v->m = v->type == ArcType::a ? u : lift<NCPoly>(constants().C) * u;
    }
    const auto [l, r] = case_equation(m);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if (!rs.normal_form(l(i, j) - r(i, j)).is_zero()) return false;
    return true;
}

void validate_point(const Presentation& p, const SL2Point& pt) {
    for (const auto& g : p.generators) {
        auto it = pt.find(g.id);
        if (it == pt.end()) throw Error(ErrorCode::validation, "point misses a generator", g.id);
        const QMat& m = it->second;
        if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorCode::validation, "point matrices are 2x2", g.id);
        const mpq_class det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        if (det != 1) throw Error(ErrorCode::validation, "point matrix must have determinant 1", g.id + ": det " + det.get_str());
    }
}

mpq_class evaluate_at_point(const QPoly& x, const Presentation& p, const SL2Point& pt) {
    validate_point(p, pt);
    std::vector<mpq_class> value(p.letters());
    for (size_t g = 0; g < p.generators.size(); ++g)
        for (int s = 0; s < 4; ++s) value[p.letter(g, s)] = pt.at(p.generators[g].id)(s & 1, s >> 1);
    mpq_class out = 0;
    for (const auto& [w, c] : x.terms()) {
        mpq_class t = c;
        for (Letter l : w) t *= value[l];
        out += t;
    }
    return out;
}

QMat random_sl2(std::mt19937& rng, int shears) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    QMat m = QMat::identity(2);
    for (int k = 0; k < shears; ++k) {
        mpq_class t(num(rng), den(rng));
        t.canonicalize();
        QMat e = QMat::identity(2);
        e(k % 2, 1 - k % 2) = t;
        m = m * e;
    }
    return m;
}

SL2Point random_point(const Presentation& p, std::mt19937& rng) {
    SL2Point pt;
    for (const auto& g : p.generators) pt.emplace(g.id, random_sl2(rng));
    return pt;
}

std::vector<std::string> non_commutator_exchange_rules(const Presentation& p, const QSystem& rs) {
    std::vector<std::string> bad;
    const Alphabet ab = p.alphabet();
    for (const auto& r : rs.rules()) {
        if (p.gen_of(r.lead[0]) == p.gen_of(r.lead[1])) continue;
        if (!(r.rhs == QPoly::word(Word{r.lead[1], r.lead[0]}))) bad.push_back(word_text(r.lead, ab));
    }
    return bad;
}

}  // namespace skein
