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
#include "skein/elimination.hpp"
#include "skein/error.hpp"

#include <random>

using namespace skein;
using namespace fixtures;

namespace {

NCPoly L(const Presentation& p, const std::string& id, int s) { return NCPoly::letter(p.letter(p.index_of(id), s)); }

Word random_word(std::mt19937& rng, size_t letters, size_t max_len) {
    std::uniform_int_distribution<size_t> len(0, max_len), pick(0, letters - 1);
    Word w(len(rng));
    for (auto& l : w) l = static_cast<Letter>(pick(rng));
    return w;
}

// Loop on v, then a path u -> v and back v -> u around it.
Presentation lollipop() {
    return make_presentation({path("a", "u", 1, "v", 0), loop("l", "v", 1, 2), path("b", "v", 3, "u", 0)},
                             {{{"b", false}, {"l", false}, {"a", false}}});
}

}  // namespace

TEST_CASE("reflection anti-involution") {
    Presentation p = daisy(1);
    Presentation f = height_flipped(p);
    NCPoly x = Laurent::w(1) * (L(p, "a", pp) * L(p, "b", mm));
    NCPoly y = Laurent::w(-1) * (L(f, "b", mm) * L(f, "a", pp));
    CHECK(reflection_theta(x, p) == y);
    CHECK(reflection_theta(reflection_theta(x, p), f) == x);
    CHECK(f.generators[0].type == ArcType::c);

    Presentation d = single(ArcType::d);
    Presentation c = height_flipped(d);
    NCSystem rd = build_rewrite_system(d), rc = build_rewrite_system(c);
    for (const auto& r : rd.rules()) CHECK(rc.normal_form(reflection_theta(r.relator(), d)).is_zero());

    NCSystem big = build_rewrite_system(p), flipped = build_rewrite_system(f);
    std::mt19937 rng(5);
    for (int k = 0; k < 100; ++k) {
        NCPoly u = NCPoly::word(random_word(rng, p.letters(), 3), Laurent::w(k % 7 - 3));
        NCPoly v = NCPoly::word(random_word(rng, p.letters(), 3));
        NCPoly lhs = reflection_theta(big.multiply(u, v), p);
        NCPoly rhs = reflection_theta(v, p) * reflection_theta(u, p);
        CHECK(flipped.normal_form(lhs) == flipped.normal_form(rhs));
    }
}

TEST_CASE("loop identities") {
    Presentation p = single(ArcType::a);
    NCSystem rs = build_rewrite_system(p);
    CHECK(loop_identity_check(p, {{0, true}, {0, false}}, rs));
    CHECK(loop_identity_check(p, {{0, false}, {0, true}}, rs));
    CHECK_FALSE(loop_identity_check(p, {{0, false}}, rs));
    Presentation d = one_loop();
    CHECK_THROWS_AS(loop_identity_check(d, {{0, true}}, build_rewrite_system(d)), Error);
    CHECK_THROWS_AS(loop_identity_check(single(ArcType::c), {{0, false}}, build_rewrite_system(single(ArcType::c))),
                    Error);
}

TEST_CASE("triangle elimination") {
    Presentation p = triangle();
    for (const char* id : {"a", "b", "g"}) {
        CAPTURE(id);
        Elimination e = eliminate_generators(p, {id});
        CHECK(e.reduced.generators.size() == 2);
        CHECK(e.reduced.relations.empty());
        CHECK(transported_failures(p, e).empty());
        // The relation itself now holds in the smaller algebra.
        NCSystem small = build_rewrite_system(e.reduced);
        const PMat m = trivial_loop_matrix(p, p.relations[0]);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                NCPoly entry = m(i, j) - (i == j ? NCPoly(1) : NCPoly());
                CHECK(small.normal_form(transport(e, entry)).is_zero());
            }
    }
}

TEST_CASE("elimination restrictions") {
    CHECK_THROWS_AS(eliminate_generators(lollipop(), {"a"}), Error);
    Elimination e = eliminate_generators(lollipop(), {"l"});
    CHECK(transported_failures(lollipop(), e).empty());
    CHECK_THROWS_AS(eliminate_generators(triangle(), {}), Error);
    CHECK_THROWS_AS(eliminate_generators(triangle(), {"zz"}), Error);
    Presentation back = make_presentation({path("a", "u", 0, "v", 0)}, {{{"a", true}, {"a", false}}});
    CHECK_THROWS_AS(eliminate_generators(back, {"a"}), Error);
}
