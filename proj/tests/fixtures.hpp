#ifndef SKEIN_TEST_FIXTURES_HPP
#define SKEIN_TEST_FIXTURES_HPP

#include <string>
#include <vector>

#include "skein/presentation.hpp"

namespace fixtures {

using namespace skein;

inline RawGenerator loop(const std::string& id, const std::string& arc, int s, int t) {
    return RawGenerator{id, {arc, s}, {arc, t}, Height::target_above};
}

inline RawGenerator path(const std::string& id, const std::string& a, int s, const std::string& b, int t) {
    return RawGenerator{id, {a, s}, {b, t}, Height::unset};
}

inline Presentation single(ArcType t) {
    if (t == ArcType::a) return make_presentation({path("a", "u", 0, "v", 0)}, {});
    if (t == ArcType::d) return make_presentation({loop("a", "v", 0, 1)}, {});
    return make_presentation({RawGenerator{"a", {"v", 0}, {"v", 1}, Height::source_above}}, {});
}

// Daisy of genus g: loops with interleaved ends per handle.
inline Presentation daisy(int genus) {
    std::vector<RawGenerator> g;
    const char* names = "abcdefgh";
    for (int h = 0; h < genus; ++h) {
        g.push_back(loop(std::string(1, names[2 * h]), "v", 4 * h, 4 * h + 2));
        g.push_back(loop(std::string(1, names[2 * h + 1]), "v", 4 * h + 1, 4 * h + 3));
    }
    return make_presentation(g, {});
}

inline Presentation one_loop() { return make_presentation({loop("a", "v", 0, 1)}, {}); }

// Two vertices joined by two edges.
inline Presentation two_vertex() {
    return make_presentation({path("a", "u", 0, "v", 0), path("b", "u", 1, "v", 1)}, {});
}

// Triangle with relation a*b*g: g runs u->v, b runs v->w, a runs w->u.
// At each boundary arc the incoming end precedes the outgoing end.
inline Presentation triangle() {
    return make_presentation({path("a", "w", 1, "u", 0), path("b", "v", 1, "w", 0), path("g", "u", 1, "v", 0)},
                             {{{"a", false}, {"b", false}, {"g", false}}});
}

}  // namespace fixtures

#endif
