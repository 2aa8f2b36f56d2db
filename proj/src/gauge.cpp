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

#include "skein/gauge.hpp"

#include <algorithm>

#include "skein/error.hpp"
#include "skein/linsolve.hpp"
#include "skein/relators.hpp"

namespace skein {

namespace {

Presentation bigon_presentation() {
    return make_presentation({RawGenerator{"x", {"l", 0}, {"r", 0}, Height::unset}}, {});
}

Letter xl(int i, int j) { return static_cast<Letter>(2 * i + j); }

// Delta^G on one letter with coefficients in K; factor 0 is the base.
template <class K>
Tensor<K> coact_letter(const Presentation& p, const std::vector<std::string>& arcs, Letter x) {
    const size_t gen = p.gen_of(x);
    const int st = p.state_of(x);
    const int i = st >> 1, j = st & 1;
    const auto& g = p.generators[gen];
    auto slot = [&](const std::string& arc) {
        return 1 + static_cast<size_t>(std::find(arcs.begin(), arcs.end(), arc) - arcs.begin());
    };
    const size_t v1 = slot(g.source.arc), v2 = slot(g.target.arc);
    Tensor<K> t(1 + arcs.size());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            typename Tensor<K>::Key k(1 + arcs.size());
            k[0] = Word{p.letter(gen, 2 * a + b)};
            // x_{bj} at the target copy sits left of x_{ai} at the source copy.
            k[v2].push_back(xl(b, j));
            k[v1].push_back(xl(a, i));
            t.add(k, K(1));
        }
    return t;
}

template <class K>
Tensor<K> coact_poly(const Presentation& p, const std::vector<std::string>& arcs, const Poly<K>& x,
                     const std::vector<const RewriteSystem<K>*>& systems) {
    Tensor<K> out(1 + arcs.size());
    std::map<Letter, Tensor<K>> cache;
    for (const auto& [w, c] : x.terms()) {
        Tensor<K> term = Tensor<K>::unit(1 + arcs.size(), c);
        for (Letter l : w) {
            auto it = cache.find(l);
            if (it == cache.end()) it = cache.emplace(l, coact_letter<K>(p, arcs, l)).first;
            term = (term * it->second).normal_form(systems);
        }
        out += term;
    }
    return out.normal_form(systems);
}

template <class K>
Tensor<K> minus_trivial(Tensor<K> t, const Word& w, const K& c) {
    typename Tensor<K>::Key k(t.factors());
    k[0] = w;
    t.add(k, -c);
    return t;
}

}  // namespace

const NCSystem& bigon() {
    static const NCSystem rs = [] {
        Presentation p = bigon_presentation();
        NCSystem base = build_rewrite_system(p);
        Alphabet ab;
        for (int s = 0; s < 4; ++s) ab.names.push_back(std::string("x[") + state_name(s) + "]");
        return NCSystem(ab, base.rules());
    }();
    return rs;
}

NCTensor coproduct(Letter x) {
    const int i = x >> 1, j = x & 1;
    NCTensor t(2);
    for (int k = 0; k < 2; ++k) t.add({Word{xl(i, k)}, Word{xl(k, j)}}, Laurent(1));
    return t;
}

Laurent counit(Letter x) { return (x >> 1) == (x & 1) ? Laurent(1) : Laurent(); }

Laurent counit(const Word& w) {
    for (Letter x : w)
        if ((x >> 1) != (x & 1)) return {};
    return 1;
}

NCPoly antipode(Letter x) {
    // S(X) = C^-1 tX C with X(i, j) = x_ij.
    const auto& k = constants();
    const int i = x >> 1, j = x & 1;
    NCPoly out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Laurent c = k.Cinv(i, a) * k.C(b, j);
            if (!c.is_zero()) out += c * NCPoly::letter(xl(b, a));
        }
    return out;
}

NCPoly antipode(const NCPoly& x) {
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
        NCPoly term(c);
        for (auto it = w.rbegin(); it != w.rend(); ++it) term = term * antipode(*it);
        out += term;
    }
    return bigon().normal_form(out);
}

GaugeCoaction::GaugeCoaction(const Presentation& p) : p_(p) {
    if (!p.relations.empty())
        throw Error(ErrorCode::validation, "the gauge coaction needs a presentation without relations");
    for (const auto& g : p.generators)
        if (g.type != ArcType::a && g.type != ArcType::d)
            throw Error(ErrorCode::validation, "the gauge coaction supports arcs of type a or d", g.id);
    rs_ = build_rewrite_system(p);
}

std::vector<const NCSystem*> GaugeCoaction::systems(size_t gauge_copies) const {
    std::vector<const NCSystem*> s{&rs_};
    for (size_t k = 0; k < gauge_copies * vertices(); ++k) s.push_back(&bigon());
    return s;
}

NCTensor GaugeCoaction::on_letter(Letter x) const { return coact_letter<Laurent>(p_, p_.boundary_arcs, x); }

NCTensor GaugeCoaction::apply(const NCPoly& x) const { return coact_poly<Laurent>(p_, p_.boundary_arcs, x, systems()); }

NCTensor GaugeCoaction::coassoc_left(Letter x) const {
    // Apply Delta^G again to the base factor; new gauge copies go first.
    const size_t V = vertices();
    NCTensor out(1 + 2 * V);
    const NCTensor first = apply(NCPoly::letter(x));
    for (const auto& [k, c] : first.terms()) {
        NCTensor inner = apply(NCPoly::word(k[0], c));
        for (const auto& [ki, ci] : inner.terms()) {
            NCTensor::Key nk(1 + 2 * V);
            for (size_t f = 0; f <= V; ++f) nk[f] = ki[f];
            for (size_t v = 0; v < V; ++v) nk[1 + V + v] = k[1 + v];
            out.add(nk, ci);
        }
    }
    return out.normal_form(systems(2));
}

NCTensor GaugeCoaction::coassoc_right(Letter x) const {
    // Apply the coproduct to every gauge copy.
    const size_t V = vertices();
    NCTensor out(1 + 2 * V);
    const NCTensor first = apply(NCPoly::letter(x));
    for (const auto& [k, c] : first.terms()) {
        NCTensor acc = NCTensor::unit(1 + 2 * V, c);
        {
            NCTensor::Key base(1 + 2 * V);
            base[0] = k[0];
            NCTensor b(1 + 2 * V);
            b.add(base, Laurent(1));
            acc = acc * b;
        }
        for (size_t v = 0; v < V; ++v)
            for (Letter l : k[1 + v]) {
                NCTensor d(1 + 2 * V);
                const NCTensor split = coproduct(l);
                for (const auto& [kd, cd] : split.terms()) {
                    NCTensor::Key nk(1 + 2 * V);
                    nk[1 + v] = kd[0];
                    nk[1 + V + v] = kd[1];
                    d.add(nk, cd);
                }
                acc = acc * d;
            }
        out += acc;
    }
    return out.normal_form(systems(2));
}

NCPoly GaugeCoaction::counit_image(Letter x) const {
    NCPoly out;
    const NCTensor first = apply(NCPoly::letter(x));
    for (const auto& [k, c] : first.terms()) {
        Laurent e = c;
        for (size_t f = 1; f < k.size(); ++f) e *= counit(k[f]);
        out.add_term(k[0], e);
    }
    return out;
}

std::string GaugeCoaction::text(const NCTensor& t) const {
    std::string out;
    const Alphabet ab = p_.alphabet();
    for (const auto& [k, c] : t.terms()) {
        out += "(" + c.str() + ") " + word_text(k[0], ab) + " (x)";
        for (size_t v = 0; v < vertices(); ++v) {
            out += " [" + p_.boundary_arcs[v] + ": " + word_text(k[1 + v], bigon().alphabet()) + "]";
        }
        out += "\n";
    }
    return out;
}

ComoduleReport check_comodule(const GaugeCoaction& g) {
    ComoduleReport rep;
    const Presentation& p = g.presentation();
    const Alphabet ab = p.alphabet();
    rep.generators = p.letters();
    for (size_t x = 0; x < p.letters(); ++x) {
        const Letter l = static_cast<Letter>(x);
        if (!(g.counit_image(l) == NCPoly::letter(l))) rep.counit_failures.push_back(ab.names[x]);
        if (!(g.coassoc_left(l) == g.coassoc_right(l))) rep.coassoc_failures.push_back(ab.names[x]);
    }
    for (const auto& r : g.system().rules()) {
        ++rep.relators;
        if (!g.apply(r.relator()).is_zero()) rep.morphism_failures.push_back(word_text(r.lead, ab));
    }
    return rep;
}

namespace {

template <class K>
struct CoactionMatrix {
    std::vector<Word> words;
    std::vector<typename Tensor<K>::Key> rows;
    std::vector<std::vector<K>> cols;  // cols[j][i]
};

template <class K>
CoactionMatrix<K> coaction_matrix(const Presentation& p, const RewriteSystem<K>& base,
                                  const RewriteSystem<K>& gauge, size_t d) {
    CoactionMatrix<K> m;
    m.words = base.normal_words(d);
    std::vector<const RewriteSystem<K>*> systems{&base};
    for (size_t v = 0; v < p.boundary_arcs.size(); ++v) systems.push_back(&gauge);
    std::vector<Tensor<K>> images;
    std::map<typename Tensor<K>::Key, size_t> row_index;
    for (const Word& w : m.words) {
        Tensor<K> t = minus_trivial(coact_poly<K>(p, p.boundary_arcs, Poly<K>::word(w), systems), w, K(1));
        for (const auto& [k, c] : t.terms()) row_index.emplace(k, 0);
        images.push_back(std::move(t));
    }
    size_t r = 0;
    for (auto& [k, idx] : row_index) {
        idx = r++;
        m.rows.push_back(k);
    }
    for (const auto& t : images) {
        std::vector<K> col(m.rows.size());
        for (const auto& [k, c] : t.terms()) col[row_index.at(k)] = c;
        m.cols.push_back(std::move(col));
    }
    return m;
}

}  // namespace

std::vector<NCPoly> coinvariants(const GaugeCoaction& g, size_t d) {
    auto cm = coaction_matrix<Laurent>(g.presentation(), g.system(), bigon(), d);
    LMat m(cm.rows.size(), cm.words.size());
    for (size_t j = 0; j < cm.words.size(); ++j)
        for (size_t i = 0; i < cm.rows.size(); ++i) m(i, j) = cm.cols[j][i];
    std::vector<NCPoly> out;
    if (cm.rows.empty()) {
        for (const auto& w : cm.words) out.push_back(NCPoly::word(w));
        return out;
    }
    for (const auto& v : kernel_basis(m)) {
        NCPoly x;
        for (size_t j = 0; j < v.size(); ++j) x.add_term(cm.words[j], v[j]);
        out.push_back(std::move(x));
    }
    return out;
}

size_t coinvariant_dimension_at(const GaugeCoaction& g, size_t d, const mpq_class& w0) {
    const QSystem base = specialize(g.system(), w0);
    const QSystem gauge = specialize(bigon(), w0);
    auto cm = coaction_matrix<mpq_class>(g.presentation(), base, gauge, d);
    std::vector<std::vector<mpq_class>> m(cm.rows.size(), std::vector<mpq_class>(cm.words.size()));
    for (size_t j = 0; j < cm.words.size(); ++j)
        for (size_t i = 0; i < cm.rows.size(); ++i) m[i][j] = cm.cols[j][i];
    return cm.words.size() - rank_rational(std::move(m));
}

bool in_span(const std::vector<NCPoly>& basis, const NCPoly& x) {
    std::vector<Word> words;
    auto collect = [&](const NCPoly& p) {
        for (const auto& [w, c] : p.terms()) words.push_back(w);
    };
    for (const auto& b : basis) collect(b);
    collect(x);
    std::sort(words.begin(), words.end(), WordLess{});
    words.erase(std::unique(words.begin(), words.end()), words.end());
    auto fill = [&](LMat& m, size_t col, const NCPoly& p) {
        for (size_t i = 0; i < words.size(); ++i) m(i, col) = p.coeff(words[i]);
    };
    LMat a(words.size(), basis.size()), b(words.size(), basis.size() + 1);
    for (size_t j = 0; j < basis.size(); ++j) {
        fill(a, j, basis[j]);
        fill(b, j, basis[j]);
    }
    fill(b, basis.size(), x);
    return rank(a) == rank(b);
}

}  // namespace skein
