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

#include "doctest.h"
#include "fixtures.hpp"
#include "skein/classical.hpp"
#include "skein/elimination.hpp"
#include "skein/error.hpp"
#include "skein/gauge.hpp"

using namespace skein;
using namespace fixtures;

namespace {

QMat q2(long a, long b, long c, long d) {
    QMat m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

NCPoly random_poly(std::mt19937& rng, size_t letters) {
    std::uniform_int_distribution<int> len(0, 3), coef(-2, 2), expo(-4, 4);
    std::uniform_int_distribution<size_t> pick(0, letters - 1);
    NCPoly x;
    for (int t = 0; t < 4; ++t) {
        Word w(len(rng));
        for (auto& l : w) l = static_cast<Letter>(pick(rng));
        x.add_term(w, Laurent::monomial(coef(rng), expo(rng)));
    }
    return x;
}

}  // namespace

TEST_CASE("spin functions") {
    Presentation t = triangle();
    CHECK(validate_spin(t, spin_from_map(t, {{"a", 1}})));
    CHECK_FALSE(validate_spin(t, SpinFunction(3, 0)));
    CHECK(validate_spin(daisy(1), SpinFunction(2, 0)));
    CHECK_THROWS_AS(validate_spin(t, SpinFunction(2, 0)), Error);
}

TEST_CASE("U-generators") {
    for (const Presentation& p : {single(ArcType::a), one_loop(), two_vertex(), daisy(1)})
        for (int w : {0, 1}) {
            UForm u(p, SpinFunction(p.generators.size(), w));
            NCSystem rs = build_rewrite_system(p);
            for (size_t g = 0; g < p.generators.size(); ++g) CHECK(rs.normal_form(u.to_m(u.qdet(g))).is_zero());
            for (const auto& r : rs.rules()) {
                const NCPoly x = r.relator();
                CHECK(u.to_m(u.to_u(x)) == x);
                CHECK(rs.normal_form(u.to_m(u.to_u(x))).is_zero());
            }
        }
    Presentation d = one_loop();
    UForm u(d, {0});
    CHECK(u.u_in_m(0) == n_from_m(ArcType::d, m_matrix(d, 0)));
    CHECK_THROWS_AS(UForm(single(ArcType::c), {0}), Error);
}

TEST_CASE("U-form exchange equations for loops") {
    for (const Presentation& p : {daisy(1), daisy(2)}) {
        UForm u(p, SpinFunction(p.generators.size(), 1));
        NCSystem rs = build_rewrite_system(p);
        for (size_t b = 1; b < p.generators.size(); ++b)
            for (size_t s = 0; s < b; ++s) CHECK(u.exchange_shape_holds(rs, b, s));
    }
}

TEST_CASE("gauge coaction on U-entries") {
    // Delta(U) = S(X at the target) U X(at the source), entrywise.
    for (const Presentation& p : {one_loop(), single(ArcType::a), two_vertex()}) {
        const UForm u(p, SpinFunction(p.generators.size(), 1));
        const GaugeCoaction g(p);
        for (size_t gen = 0; gen < p.generators.size(); ++gen) {
            const auto& arc = p.generators[gen];
            auto slot = [&](const std::string& a) {
                return 1 + static_cast<size_t>(std::find(p.boundary_arcs.begin(), p.boundary_arcs.end(), a) -
                                               p.boundary_arcs.begin());
            };
            const size_t v1 = slot(arc.source.arc), v2 = slot(arc.target.arc);
            const PMat U = u.u_in_m(gen);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    NCTensor expected(g.factors());
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b) {
                            const NCPoly s = antipode(static_cast<Letter>(2 * i + a));
                            for (const auto& [w, c] : U(a, b).terms())
                                for (const auto& [sw, sc] : s.terms()) {
                                    NCTensor::Key k(g.factors());
                                    k[0] = w;
                                    k[v2] = sw;
                                    k[v1].push_back(static_cast<Letter>(2 * b + j));
                                    expected.add(k, c * sc);
                                }
                        }
                    CHECK(g.apply(U(i, j)) == expected.normal_form(g.systems()));
                }
        }
    }
}

TEST_CASE("U-form trivial loop on the triangle") {
    Presentation t = triangle();
    UForm u(t, spin_from_map(t, {{"g", 1}}));
    Elimination e = eliminate_generators(t, {"b"});
    NCSystem small = build_rewrite_system(e.reduced);
    const PMat l = u.loop(t.relations[0]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(small.normal_form(transport(e, u.to_m(l(i, j)))).is_zero());
    // Even total spin breaks the identity.
    UForm even(t, SpinFunction(3, 0));
    CHECK_FALSE(small.normal_form(transport(e, even.to_m(even.loop(t.relations[0])(0, 0)))).is_zero());
}

TEST_CASE("specialization") {
    for (const Presentation& p : {two_vertex(), daisy(1), daisy(2)}) {
        QSystem one = specialize(build_rewrite_system(p), 1);
        CHECK(non_commutator_exchange_rules(p, one).empty());
    }
    Presentation a = single(ArcType::a);
    QSystem two = specialize(build_rewrite_system(a), 2);
    CHECK(two.rule_for(a.letter(0, pm), a.letter(0, pp))->rhs.coeff(Word{a.letter(0, pp), a.letter(0, pm)}) == mpq_class(1, 16));

    std::mt19937 rng(11);
    for (const Presentation& p : {daisy(1), two_vertex()}) {
        NCSystem rs = build_rewrite_system(p);
        for (const mpq_class& w0 : {mpq_class(1), mpq_class(3, 2), mpq_class(-2)}) {
            QSystem s = specialize(rs, w0);
            for (int k = 0; k < 25; ++k) {
                NCPoly x = random_poly(rng, p.letters());
                CHECK(specialize(rs.normal_form(x), w0) == s.normal_form(specialize(x, w0)));
            }
        }
    }
}

TEST_CASE("evaluation at SL2 points") {
    std::mt19937 rng(23);
    for (const Presentation& p : {daisy(1), two_vertex()}) {
        NCSystem rs = build_rewrite_system(p);
        UForm u(p, SpinFunction(p.generators.size(), 0));
        std::vector<QPoly> relators;
        for (const auto& r : rs.rules()) relators.push_back(specialize(u.to_u(r.relator()), 1));
        for (size_t g = 0; g < p.generators.size(); ++g) relators.push_back(specialize(u.qdet(g), 1));
        for (int k = 0; k < 100; ++k) {
            SL2Point pt = random_point(p, rng);
            for (const auto& x : relators) CHECK(evaluate_at_point(x, p, pt) == 0);
        }
        SL2Point fixed{{p.generators[0].id, q2(1, 1, 0, 1)}, {p.generators[1].id, q2(1, 0, 1, 1)}};
        for (const auto& x : relators) CHECK(evaluate_at_point(x, p, fixed) == 0);
    }
    Presentation t = triangle();
    UForm u(t, spin_from_map(t, {{"a", 1}}));
    SL2Point id{{"a", q2(1, 0, 0, 1)}, {"b", q2(1, 0, 0, 1)}, {"g", q2(1, 0, 0, 1)}};
    const PMat l = u.loop(t.relations[0]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(evaluate_at_point(specialize(l(i, j), 1), t, id) == 0);
    SL2Point bad = id;
    bad["a"] = q2(2, 0, 0, 1);
    CHECK_THROWS_AS(evaluate_at_point(QPoly(1), t, bad), Error);
    for (int k = 0; k < 20; ++k) {
        QMat m = random_sl2(rng);
        CHECK(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) == 1);
    }
}
