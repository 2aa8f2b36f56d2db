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
#include "skein/error.hpp"
#include "skein/expression.hpp"
#include "skein/relators.hpp"

#include <random>

using namespace skein;
using namespace fixtures;

TEST_CASE("expression grammar") {
    Presentation p = one_loop();
    const Alphabet ab = p.alphabet();
    auto L = [&](int s) { return NCPoly::letter(p.letter(0, s)); };
    CHECK(parse_expression("a[pm]*a[mp]", ab) == L(pm) * L(mp));
    CHECK(parse_expression("w^-5*a[pm] + w^-1*a[mp]", ab) == Laurent::w(-5) * L(pm) + Laurent::w(-1) * L(mp));
    CHECK(parse_expression("-(a[pp] - 2)^2", ab) == -((L(pp) - NCPoly(2)) * (L(pp) - NCPoly(2))));
    CHECK(parse_expression("3*w - w^0", ab) == NCPoly(Laurent::monomial(3, 1) - Laurent(1)));
    CHECK(parse_expression("a[pp]*a[pm]*a[mm]", ab) == L(pp) * L(pm) * L(mm));
    for (const char* bad : {"a[xy]", "b[pp]", "a[pp]*", "(a[pp]", "a[pp]^-1", "z", "a[pp] $"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_expression(bad, ab), Error);
    }
    try {
        parse_expression("a[pp] + a[xy]", ab);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse);
        CHECK(e.context() == "offset 10");  // the state token
    }
}

TEST_CASE("printing then parsing is the identity") {
    Presentation p = daisy(1);
    NCSystem rs = build_rewrite_system(p);
    const Alphabet ab = p.alphabet();
    std::mt19937 rng(3);
    std::uniform_int_distribution<size_t> pick(0, p.letters() - 1);
    std::uniform_int_distribution<int> len(0, 3);
    for (int k = 0; k < 50; ++k) {
        NCPoly x;
        for (int t = 0; t < 3; ++t) {
            Word w(len(rng));
            for (auto& l : w) l = static_cast<Letter>(pick(rng));
            x.add_term(w, Laurent::monomial(t - 1, k % 5 - 2));
        }
        const NCPoly y = rs.normal_form(x);
        CHECK(parse_expression(poly_text(y, ab), ab) == y);
    }
    for (const auto& r : rs.rules()) CHECK(parse_expression(poly_text(r.rhs, ab), ab) == r.rhs);
}
