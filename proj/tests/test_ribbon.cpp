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
#include "skein/error.hpp"
#include "skein/io.hpp"
#include "skein/relators.hpp"
#include "skein/ribbon.hpp"

#include <algorithm>

using namespace skein;

namespace {

CiliatedGraph one_loop_graph() { return {{{"v0", {"h1", "h2"}}}, {{"a", "h1", "h2"}}}; }

CiliatedGraph interleaved() { return {{{"v0", {"h1", "h3", "h2", "h4"}}}, {{"a", "h1", "h2"}, {"b", "h3", "h4"}}}; }

// Planar theta: the second vertex lists its half-edges in the mirrored order.
CiliatedGraph theta() {
    return {{{"u", {"x1", "x2", "x3"}}, {"v", {"y3", "y2", "y1"}}},
            {{"a", "x1", "y1"}, {"b", "x2", "y2"}, {"c", "x3", "y3"}}};
}

CiliatedGraph daisy_graph(int genus) {
    CiliatedGraph g{{{"v0", {}}}, {}};
    for (int h = 0; h < genus; ++h) {
        const std::string k = std::to_string(h);
        for (const char* s : {"p", "q", "r", "s"}) g.vertices[0].half_edges.push_back(s + k);
        g.edges.push_back({"x" + k, "p" + k, "r" + k});
        g.edges.push_back({"y" + k, "q" + k, "s" + k});
    }
    return g;
}

CiliatedGraph rotated(CiliatedGraph g) {
    for (auto& v : g.vertices) std::rotate(v.half_edges.begin(), v.half_edges.begin() + 1, v.half_edges.end());
    return g;
}

}  // namespace

TEST_CASE("boundary tracing") {
    CHECK(trace_boundary(one_loop_graph()).size() == 2);
    CHECK(trace_boundary(interleaved()).size() == 1);
    CHECK(trace_boundary(theta()).size() == 3);
    for (const auto& g : {one_loop_graph(), interleaved(), theta(), daisy_graph(3)}) {
        size_t sides = 0;
        for (const auto& c : trace_boundary(g)) sides += c.size();
        CHECK(sides == 2 * g.edges.size());
        CHECK(trace_boundary(rotated(g)).size() == trace_boundary(g).size());
    }
}

TEST_CASE("surface invariants") {
    auto s = surface_invariants(one_loop_graph());
    CHECK(s.genus == 0);
    CHECK(s.boundary_components_of_fattening == 2);
    CHECK(s.punctures_closed == 2);
    CHECK(s.boundary_arcs_open == 1);
    CHECK(s.inner_punctures_open == 1);
    auto t = surface_invariants(interleaved());
    CHECK(t.genus == 1);
    CHECK(t.boundary_components_of_fattening == 1);
    CHECK(t.inner_punctures_open == 0);
    CHECK(surface_invariants(theta()).genus == 0);
    for (int g = 1; g <= 3; ++g) {
        auto d = surface_invariants(daisy_graph(g));
        CHECK(d.genus == g);
        CHECK(d.boundary_components_of_fattening == 1);
        // 2g - 2 + s + boundary count, with one puncture and one boundary arc.
        CHECK(build_presentation(daisy_graph(g)).generators.size() == static_cast<size_t>(2 * g - 2 + 1 + 1));
    }
}

TEST_CASE("malformed graphs") {
    CiliatedGraph g = one_loop_graph();
    g.edges[0].second = "h9";
    CHECK_THROWS_AS(trace_boundary(g), Error);
    CiliatedGraph twice = interleaved();
    twice.edges[1].first = "h1";
    CHECK_THROWS_AS(trace_boundary(twice), Error);
    CiliatedGraph loose{{{"v0", {"h1", "h2"}}, {"v1", {"h3"}}}, {{"a", "h1", "h2"}}};
    CHECK_THROWS_AS(trace_boundary(loose), Error);
    CiliatedGraph split{{{"v0", {"h1", "h2"}}, {"v1", {"h3", "h4"}}}, {{"a", "h1", "h2"}, {"b", "h3", "h4"}}};
    CHECK_FALSE(is_connected(split));
    CHECK_THROWS_AS(build_presentation(split), Error);
}

TEST_CASE("presentations from graphs") {
    auto p = build_presentation(one_loop_graph());
    REQUIRE(p.generators.size() == 1);
    CHECK(p.generators[0].type == ArcType::d);
    CHECK(p.relations.empty());
    CiliatedGraph backwards{{{"v0", {"h1", "h2"}}}, {{"a", "h2", "h1"}}};
    auto r = build_presentation(backwards);
    CHECK(r.generators[0].type == ArcType::d);
    CHECK(r.generators[0].reversed);
    CiliatedGraph edge{{{"u", {"h1"}}, {"v", {"h2"}}}, {{"a", "h1", "h2"}}};
    CHECK(build_presentation(edge).generators[0].type == ArcType::a);

    for (const auto& g : {interleaved(), theta(), daisy_graph(2)}) {
        auto q = build_presentation(g);
        for (const auto& gen : q.generators) CHECK((gen.type == ArcType::a || gen.type == ArcType::d));
        for (size_t i = 0; i < q.generators.size(); ++i)
            for (size_t j = 0; j < i; ++j) CHECK_NOTHROW(match_configuration(q, i, j));
    }
    auto d = build_presentation(interleaved());
    auto m = match_configuration(d, 1, 0);
    CHECK((m.kase == Case::viii || m.kase == Case::ix || m.kase == Case::x));
}

TEST_CASE("JSON input") {
    const std::string graph = R"({"vertices":[{"id":"v0","half_edges":["h1","h2"]}],"edges":[{"id":"a","half_edges":["h1","h2"]}]})";
    auto in = load_input(graph);
    CHECK(in.from_graph);
    CHECK(in.presentation.generators[0].type == ArcType::d);

    const std::string pres = R"({"generators":[
        {"id":"a","source":["w",1],"target":["u",0]},
        {"id":"b","source":["v",1],"target":["w",0]},
        {"id":"g","source":["u",1],"target":["v",0]}],
        "relations":[["a","b","g"]], "order":["g","b","a"]})";
    auto p = load_input(pres).presentation;
    CHECK(p.relations.size() == 1);
    CHECK(p.generators[0].id == "g");
    CHECK(load_input(pres, {"a", "b", "g"}).presentation.generators[0].id == "a");

    try {
        load_input("{\"generators\": 3}");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse);
    }
    CHECK_THROWS_AS(load_input("{not json"), Error);
    auto pts = points_from_json(R"({"a":[["2","1/3"],["3","1"]]})");
    CHECK(pts.at("a")(0, 1) == mpq_class(1, 3));
    CHECK_THROWS_AS(points_from_json(R"({"a":[["x","1"],["3","1"]]})"), Error);
}
