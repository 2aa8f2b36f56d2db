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
#include "skein/gauge.hpp"
#include "skein/relators.hpp"

using namespace skein;
using namespace fixtures;

namespace {

NCPoly L(const Presentation& p, const std::string& id, int s) { return NCPoly::letter(p.letter(p.index_of(id), s)); }
NCPoly X(int i, int j) { return NCPoly::letter(static_cast<Letter>(2 * i + j)); }

}  // namespace

TEST_CASE("antipode of the bigon") {
    CHECK(antipode(X(0, 1)) == -q_() * X(0, 1));
    const NCSystem& b = bigon();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NCPoly left, right;
            for (int k = 0; k < 2; ++k) {
                left += b.multiply(X(i, k), antipode(X(k, j)));
                right += b.multiply(antipode(X(i, k)), X(k, j));
            }
            const NCPoly delta = i == j ? NCPoly(1) : NCPoly();
            CHECK(b.normal_form(left) == delta);
            CHECK(b.normal_form(right) == delta);
        }
}

TEST_CASE("coproduct respects the bigon relations") {
    const NCSystem& b = bigon();
    std::vector<const NCSystem*> sys{&b, &b};
    for (const auto& r : b.rules()) {
        NCTensor out(2);
        const NCPoly rel = r.relator();
        for (const auto& [w, c] : rel.terms()) {
            NCTensor t = NCTensor::unit(2, c);
            for (Letter l : w) t = t * coproduct(l);
            out += t;
        }
        CHECK(out.normal_form(sys).is_zero());
    }
}

TEST_CASE("comodule laws") {
    for (const Presentation& p : {one_loop(), daisy(1), two_vertex(), single(ArcType::a)}) {
        GaugeCoaction g(p);
        auto rep = check_comodule(g);
        CHECK(rep.counit_failures.empty());
        CHECK(rep.coassoc_failures.empty());
        CHECK(rep.morphism_failures.empty());
        CHECK(rep.ok());
    }
}

TEST_CASE("gauge coaction rejects relations and type c") {
    CHECK_THROWS_AS(GaugeCoaction{triangle()}, Error);
    CHECK_THROWS_AS(GaugeCoaction{single(ArcType::c)}, Error);
}

TEST_CASE("coinvariants of the one loop") {
    Presentation p = one_loop();
    GaugeCoaction g(p);
    const NCPoly y = Laurent::w(-1) * L(p, "a", pm) - Laurent::w(-5) * L(p, "a", mp);
    auto d0 = coinvariants(g, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0] == NCPoly(1));
    auto d1 = coinvariants(g, 1);
    CHECK(d1.size() == 2);
    CHECK(in_span(d1, NCPoly(1)));
    CHECK(in_span(d1, y));
    CHECK_FALSE(in_span(d1, L(p, "a", pm)));
    auto d2 = coinvariants(g, 2);
    CHECK(d2.size() == 3);
    CHECK(in_span(d2, g.system().multiply(y, y)));
    CHECK(coinvariant_dimension_at(g, 2, mpq_class(3, 2)) == 3);
}
