#include "doctest.h"
#include "fixtures.hpp"
#include "skein/relators.hpp"

#include <random>

using namespace skein;
using namespace fixtures;

namespace {

NCPoly L(const Presentation& p, const std::string& id, int s) { return NCPoly::letter(p.letter(p.index_of(id), s)); }

}  // namespace

TEST_CASE("normal forms of the bigon") {
    Presentation p = single(ArcType::a);
    NCSystem rs = build_rewrite_system(p);
    CHECK(rs.normal_form(NCPoly(1)) == NCPoly(1));
    CHECK(rs.normal_form(L(p, "a", pm) * L(p, "a", pp)) == q_() * (L(p, "a", pp) * L(p, "a", pm)));
    CHECK(rs.multiply(L(p, "a", mm), NCPoly(1)) == L(p, "a", mm));
}

TEST_CASE("type d identities") {
    Presentation p = single(ArcType::d);
    NCSystem rs = build_rewrite_system(p);
    NCPoly x = L(p, "a", mm) * L(p, "a", pp) - q_(2) * (L(p, "a", pm) * L(p, "a", mp));
    CHECK(rs.normal_form(x) == NCPoly(A_()));
    NCPoly assoc1 = rs.multiply(rs.multiply(L(p, "a", mm), L(p, "a", pm)), L(p, "a", pp));
    NCPoly assoc2 = rs.multiply(L(p, "a", mm), rs.multiply(L(p, "a", pm), L(p, "a", pp)));
    CHECK(assoc1 == assoc2);
}

TEST_CASE("type c identity") {
    Presentation p = single(ArcType::c);
    NCSystem rs = build_rewrite_system(p);
    NCPoly x = L(p, "a", pp) * L(p, "a", mm) - q_(-2) * (L(p, "a", mp) * L(p, "a", pm));
    CHECK(rs.normal_form(x) == NCPoly(A_(-1)));
}

TEST_CASE("confluence of small systems") {
    for (ArcType t : {ArcType::a, ArcType::c, ArcType::d}) {
        auto rep = certify_confluence(build_rewrite_system(single(t)));
        CHECK(rep.failures.empty());
        CHECK(rep.critical_triples > 0);
    }
    auto rep = certify_confluence(build_rewrite_system(daisy(1)));
    CHECK(rep.failures.empty());
    CHECK(rep.generators == 8);
    auto two = certify_confluence(build_rewrite_system(two_vertex()));
    CHECK(two.failures.empty());
}

TEST_CASE("negative control: dropping a constant breaks confluence") {
    Presentation p = single(ArcType::d);
    NCSystem rs = build_rewrite_system(p);
    const Word lead{p.letter(0, mm), p.letter(0, pp)};
    NCPoly rhs;
    for (const auto& r : rs.rules())
        if (r.lead == lead)
            for (const auto& [w, c] : r.rhs.terms())
                if (!w.empty()) rhs.add_term(w, c);
    auto rep = certify_confluence(rs.with_rule(lead, rhs));
    CHECK(rep.failures.size() >= 1);
}

TEST_CASE("graded dimensions") {
    NCSystem one = build_rewrite_system(single(ArcType::d));
    CHECK(one.graded_dimension(0) == 1);
    CHECK(one.graded_dimension(2) == 9);
    for (size_t n = 0; n <= 6; ++n) CHECK(one.graded_dimension(n) == mpz_class((n + 1) * (n + 1)));
    NCSystem two = build_rewrite_system(daisy(1));
    for (size_t n = 0; n <= 4; ++n) CHECK(two.graded_dimension(n) == convolution_dimension(2, n));
    CHECK(convolution_dimension(1, 3) == 16);
}

TEST_CASE("normal form properties") {
    Presentation p = daisy(1);
    NCSystem rs = build_rewrite_system(p);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> letter(0, 7), len(0, 4), coef(-3, 3), ex(-4, 4);
    auto random_poly = [&] {
        NCPoly x;
        for (int t = 0; t < 3; ++t) {
            Word w;
            for (int k = len(rng); k > 0; --k) w.push_back(static_cast<Letter>(letter(rng)));
            x.add_term(w, Laurent::monomial(coef(rng), ex(rng)));
        }
        return x;
    };
    for (int trial = 0; trial < 30; ++trial) {
        NCPoly x = random_poly(), y = random_poly();
        NCPoly nx = rs.normal_form(x);
        CHECK(rs.normal_form(nx) == nx);
        for (const auto& [w, c] : nx.terms()) CHECK(rs.is_normal(w));
        const Laurent a = Laurent::w(3) - Laurent(2), b = Laurent::w(-1);
        CHECK(rs.normal_form(a * x + b * y) == a * nx + b * rs.normal_form(y));
    }
    auto words = rs.normal_words(2);
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        NCPoly u = NCPoly::word(words[pick(rng)]), v = NCPoly::word(words[pick(rng)]), w = NCPoly::word(words[pick(rng)]);
        CHECK(rs.multiply(rs.multiply(u, v), w) == rs.multiply(u, rs.multiply(v, w)));
    }
}
