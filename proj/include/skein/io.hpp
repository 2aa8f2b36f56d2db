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

#ifndef SKEIN_IO_HPP
#define SKEIN_IO_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skein/matrix.hpp"
#include "skein/presentation.hpp"
#include "skein/ribbon.hpp"

namespace skein {

// Parsers take JSON text; malformed input is a parse error.
CiliatedGraph graph_from_json(const std::string& text);
Presentation presentation_from_json(const std::string& text, const std::vector<std::string>& order = {});

struct LoadedInput {
    Presentation presentation;
    bool from_graph = false;
    CiliatedGraph graph;  // set when from_graph
};

// Presentation keys win when a document carries both.
LoadedInput load_input(const std::string& text, const std::vector<std::string>& order = {});

std::vector<std::string> order_from_json(const std::string& text);

using QMat = Mat<mpq_class>;
// Generator id -> [[a, b], [c, d]] with rationals as strings.
std::map<std::string, QMat> points_from_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace skein

#endif
