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

#ifndef SKEIN_RIBBON_HPP
#define SKEIN_RIBBON_HPP

#include <string>
#include <vector>

#include "skein/presentation.hpp"

namespace skein {

struct GraphVertex {
    std::string id;
    std::vector<std::string> half_edges;  // linear order, cilium before the first
};

struct GraphEdge {
    std::string id;
    std::string first, second;  // oriented first -> second
};

struct CiliatedGraph {
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;
};

struct SurfaceInvariants {
    int genus = 0;
    int boundary_components_of_fattening = 0;
    int punctures_closed = 0;
    int boundary_arcs_open = 0;
    int inner_punctures_open = 0;
};

// Throws a validation error on malformed incidence.
void validate_graph(const CiliatedGraph& g);

/*
    Boundary cycles of the fattening. A cycle lists half-edges h with the
    successor of h being the rotation successor of its partner.
*/
std::vector<std::vector<std::string>> trace_boundary(const CiliatedGraph& g);

SurfaceInvariants surface_invariants(const CiliatedGraph& g);

bool is_connected(const CiliatedGraph& g);

/*
    One generator per edge on the open surface, with one boundary arc per
    vertex. Positions follow the vertex order. Loops become type d, after
    replacing a loop by its inverse when its target comes first.
*/
Presentation build_presentation(const CiliatedGraph& g);

}  // namespace skein

#endif
