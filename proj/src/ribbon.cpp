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

#include "skein/ribbon.hpp"

#include <map>
#include <numeric>
#include <set>

#include "skein/error.hpp"

namespace skein {

namespace {

struct Incidence {
    std::map<std::string, std::pair<size_t, size_t>> at;  // half-edge -> (vertex, position)
    std::map<std::string, std::string> partner;
};

Incidence incidence(const CiliatedGraph& g) {
    Incidence inc;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& vx = g.vertices[v];
        if (vx.half_edges.empty()) throw Error(ErrorCode::validation, "vertex without half-edges", vx.id);
        for (size_t k = 0; k < vx.half_edges.size(); ++k)
            if (!inc.at.emplace(vx.half_edges[k], std::pair{v, k}).second)
                throw Error(ErrorCode::validation, "half-edge listed at two vertex slots", vx.half_edges[k]);
    }
    std::set<std::string> ids;
    for (const auto& e : g.edges) {
        if (!ids.insert(e.id).second) throw Error(ErrorCode::validation, "duplicate edge id", e.id);
        for (const auto& h : {e.first, e.second}) {
            if (!inc.at.count(h)) throw Error(ErrorCode::validation, "edge uses an unknown half-edge", e.id + ":" + h);
            if (inc.partner.count(h)) throw Error(ErrorCode::validation, "half-edge used by two edges", h);
        }
        if (e.first == e.second) throw Error(ErrorCode::validation, "edge joins a half-edge to itself", e.id);
        inc.partner[e.first] = e.second;
        inc.partner[e.second] = e.first;
    }
    for (const auto& [h, where] : inc.at)
        if (!inc.partner.count(h)) throw Error(ErrorCode::validation, "half-edge without an edge", h);
    return inc;
}

}  // namespace

void validate_graph(const CiliatedGraph& g) {
    std::set<std::string> ids;
    for (const auto& v : g.vertices)
        if (!ids.insert(v.id).second) throw Error(ErrorCode::validation, "duplicate vertex id", v.id);
    if (g.vertices.empty()) throw Error(ErrorCode::validation, "graph without vertices");
    incidence(g);
}

std::vector<std::vector<std::string>> trace_boundary(const CiliatedGraph& g) {
    validate_graph(g);
    const Incidence inc = incidence(g);
    auto next = [&](const std::string& h) {
        const auto [v, k] = inc.at.at(inc.partner.at(h));
        const auto& order = g.vertices[v].half_edges;
        return order[(k + 1) % order.size()];
    };
    std::vector<std::vector<std::string>> cycles;
    std::set<std::string> seen;
    for (const auto& v : g.vertices)
        for (const auto& start : v.half_edges) {
            if (seen.count(start)) continue;
            std::vector<std::string> cycle;
            for (std::string h = start; seen.insert(h).second; h = next(h)) cycle.push_back(h);
            cycles.push_back(std::move(cycle));
        }
    return cycles;
}

bool is_connected(const CiliatedGraph& g) {
    validate_graph(g);
    const Incidence inc = incidence(g);
    std::vector<size_t> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) parent[find(inc.at.at(e.first).first)] = find(inc.at.at(e.second).first);
    for (size_t v = 0; v < parent.size(); ++v)
        if (find(v) != find(0)) return false;
    return true;
}

SurfaceInvariants surface_invariants(const CiliatedGraph& g) {
    const auto cycles = trace_boundary(g);
    SurfaceInvariants s;
    const int V = static_cast<int>(g.vertices.size()), E = static_cast<int>(g.edges.size());
    const int F = static_cast<int>(cycles.size());
    const int twice_genus = 2 - (V - E) - F;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw Error(ErrorCode::validation, "Euler characteristic is inconsistent; is the graph connected?");
    s.genus = twice_genus / 2;
    s.boundary_components_of_fattening = F;
    s.punctures_closed = F;
    s.boundary_arcs_open = V;
    // The cilium of v sits in the cycle through its first half-edge.
    std::map<std::string, size_t> cycle_of;
    for (size_t c = 0; c < cycles.size(); ++c)
        for (const auto& h : cycles[c]) cycle_of[h] = c;
    std::set<size_t> ciliated;
    for (const auto& v : g.vertices) ciliated.insert(cycle_of.at(v.half_edges.front()));
    s.inner_punctures_open = F - static_cast<int>(ciliated.size());
    return s;
}

Presentation build_presentation(const CiliatedGraph& g) {
    validate_graph(g);
    if (!is_connected(g)) throw Error(ErrorCode::validation, "unsupported: disconnected graph");
    const Incidence inc = incidence(g);
    std::vector<RawGenerator> raw;
    for (const auto& e : g.edges) {
        const auto [vs, ks] = inc.at.at(e.first);
        const auto [vt, kt] = inc.at.at(e.second);
        RawGenerator r{e.id, {g.vertices[vs].id, static_cast<int>(ks)}, {g.vertices[vt].id, static_cast<int>(kt)},
                       Height::unset};
        // Type e loops are inverted to type d on ingestion.
        if (vs == vt) r.height = ks < kt ? Height::target_above : Height::source_above;
        raw.push_back(std::move(r));
    }
    return make_presentation(raw, {});
}

}  // namespace skein
