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

#include "skein/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "skein/error.hpp"

namespace skein {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::parse, "malformed JSON", e.what());
    }
}

// Wraps nlohmann type errors into parse errors with the offending key.
template <class F>
auto guarded(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, "unexpected JSON shape", where + ": " + e.what());
    }
}

Endpoint endpoint(const json& j, const std::string& id) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
        throw Error(ErrorCode::parse, "endpoint must be [arc, position]", id);
    return {j[0].get<std::string>(), j[1].get<int>()};
}

Height height(const json& g) {
    if (!g.contains("height") || g["height"].is_null()) return Height::unset;
    const std::string h = g["height"].get<std::string>();
    if (h == "target_above") return Height::target_above;
    if (h == "source_above") return Height::source_above;
    throw Error(ErrorCode::parse, "height must be target_above or source_above", h);
}

Presentation presentation_from(const json& doc, std::vector<std::string> order) {
    return guarded("presentation", [&] {
        std::vector<RawGenerator> gens;
        for (const auto& g : doc.at("generators")) {
            const std::string id = g.at("id").get<std::string>();
            gens.push_back({id, endpoint(g.at("source"), id), endpoint(g.at("target"), id), height(g)});
        }
        std::vector<std::vector<RawRelationLetter>> rels;
        if (doc.contains("relations"))
            for (const auto& r : doc["relations"]) {
                std::vector<RawRelationLetter> word;
                for (const auto& l : r) {
                    std::string s = l.get<std::string>();
                    bool inv = false;
                    if (s.size() > 3 && s.ends_with("^-1")) {
                        inv = true;
                        s.resize(s.size() - 3);
                    }
                    word.push_back({s, inv});
                }
                rels.push_back(std::move(word));
            }
        if (order.empty() && doc.contains("order")) order = doc["order"].get<std::vector<std::string>>();
        return make_presentation(gens, rels, order);
    });
}

CiliatedGraph graph_from(const json& doc) {
    return guarded("graph", [&] {
        CiliatedGraph g;
        for (const auto& v : doc.at("vertices"))
            g.vertices.push_back({v.at("id").get<std::string>(), v.at("half_edges").get<std::vector<std::string>>()});
        for (const auto& e : doc.at("edges")) {
            const auto h = e.at("half_edges").get<std::vector<std::string>>();
            if (h.size() != 2) throw Error(ErrorCode::parse, "an edge has exactly two half-edges", e.at("id").dump());
            g.edges.push_back({e.at("id").get<std::string>(), h[0], h[1]});
        }
        return g;
    });
}

mpq_class rational(const json& j) {
    std::string s = j.is_string() ? j.get<std::string>() : j.dump();
    try {
        mpq_class q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::parse, "not a rational number", s);
    }
}

}  // namespace

CiliatedGraph graph_from_json(const std::string& text) { return graph_from(parse(text)); }

Presentation presentation_from_json(const std::string& text, const std::vector<std::string>& order) {
    return presentation_from(parse(text), order);
}

LoadedInput load_input(const std::string& text, const std::vector<std::string>& order) {
    const json doc = parse(text);
    LoadedInput in;
    if (doc.is_object() && doc.contains("generators")) {
        in.presentation = presentation_from(doc, order);
        return in;
    }
    if (doc.is_object() && doc.contains("vertices")) {
        in.graph = graph_from(doc);
        in.from_graph = true;
        in.presentation = build_presentation(in.graph);
        if (!order.empty()) {
            // Re-rank the built generators.
            std::vector<RawGenerator> raw;
            for (const auto& g : in.presentation.generators) raw.push_back({g.id, g.source, g.target, g.height});
            in.presentation = make_presentation(raw, {}, order);
        }
        return in;
    }
    throw Error(ErrorCode::parse, "input needs either generators or vertices");
}

std::vector<std::string> order_from_json(const std::string& text) {
    const json doc = parse(text);
    return guarded("order", [&] {
        const json& o = doc.is_object() ? doc.at("order") : doc;
        return o.get<std::vector<std::string>>();
    });
}

std::map<std::string, QMat> points_from_json(const std::string& text) {
    const json doc = parse(text);
    return guarded("points", [&] {
        std::map<std::string, QMat> out;
        for (const auto& [id, m] : doc.items()) {
            if (!m.is_array() || m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
                throw Error(ErrorCode::parse, "a point is a 2x2 matrix", id);
            QMat q(2, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) q(i, j) = rational(m[i][j]);
            out.emplace(id, std::move(q));
        }
        return out;
    });
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse, "cannot read file", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace skein
