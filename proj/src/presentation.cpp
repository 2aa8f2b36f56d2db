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

#include "skein/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "skein/error.hpp"

namespace skein {

const char* state_name(int s) {
    static const char* names[] = {"pp", "pm", "mp", "mm"};
    return names[s & 3];
}

int state_from_name(const std::string& s) {
    if (s == "pp") return pp;
    if (s == "pm") return pm;
    if (s == "mp") return mp;
    if (s == "mm") return mm;
    return -1;
}

namespace {

// Rank of a state inside its arc block.
int rank_of(ArcType t, int state) {
    if (t == ArcType::d && (state == pm || state == mp)) return 3 - state;
    return state;
}

}  // namespace

size_t Presentation::index_of(const std::string& id) const {
    for (size_t k = 0; k < generators.size(); ++k)
        if (generators[k].id == id) return k;
    throw Error(ErrorCode::validation, "unknown generator", id);
}

Letter Presentation::letter(size_t gen, int state) const {
    return static_cast<Letter>(4 * gen + rank_of(generators[gen].type, state));
}

int Presentation::state_of(Letter x) const {
    // rank_of is an involution on each block.
    return rank_of(generators[gen_of(x)].type, x % 4);
}

Alphabet Presentation::alphabet() const {
    Alphabet ab;
    ab.names.resize(letters());
    for (size_t g = 0; g < generators.size(); ++g)
        for (int s = 0; s < 4; ++s) ab.names[letter(g, s)] = generators[g].id + "[" + state_name(s) + "]";
    return ab;
}

ArcType classify_type(const Endpoint& s, const Endpoint& t, Height h) {
    if (s.arc != t.arc) return ArcType::a;
    if (h == Height::unset)
        throw Error(ErrorCode::validation, "generator with both endpoints on one boundary arc needs a height order",
                    s.arc);
    if (s.pos == t.pos) throw Error(ErrorCode::validation, "coincident endpoints", s.arc);
    const bool target_above = h == Height::target_above;
    if (s.pos < t.pos) return target_above ? ArcType::d : ArcType::c;
    return target_above ? ArcType::b : ArcType::e;
}

ArcType orientation_image(ArcType t) {
    switch (t) {
        case ArcType::b: return ArcType::c;
        case ArcType::c: return ArcType::b;
        case ArcType::d: return ArcType::e;
        case ArcType::e: return ArcType::d;
        default: return t;
    }
}

ArcType height_image(ArcType t) {
    switch (t) {
        case ArcType::b: return ArcType::e;
        case ArcType::e: return ArcType::b;
        case ArcType::c: return ArcType::d;
        case ArcType::d: return ArcType::c;
        default: throw Error(ErrorCode::validation, "height reversal needs both endpoints on one boundary arc");
    }
}

namespace {

Height flip(Height h) {
    if (h == Height::source_above) return Height::target_above;
    if (h == Height::target_above) return Height::source_above;
    return h;
}

void check_relations(const Presentation& p) {
    for (const auto& rel : p.relations) {
        if (rel.empty()) throw Error(ErrorCode::validation, "empty relation word");
        auto start = [&](const RelLetter& l) {
            const auto& g = p.generators[l.gen];
            return l.inverse ? g.target.arc : g.source.arc;
        };
        auto end = [&](const RelLetter& l) {
            const auto& g = p.generators[l.gen];
            return l.inverse ? g.source.arc : g.target.arc;
        };
        // Listed left to right as beta_k ... beta_1; the path runs right to left.
        for (size_t i = rel.size(); i-- > 1;)
            if (end(rel[i]) != start(rel[i - 1]))
                throw Error(ErrorCode::validation, "relation word is not path-composable",
                            p.generators[rel[i].gen].id + " then " + p.generators[rel[i - 1].gen].id);
        if (end(rel.front()) != start(rel.back()))
            throw Error(ErrorCode::validation, "relation word is not closed", p.generators[rel.front().gen].id);
    }
}

}  // namespace

Presentation make_presentation(const std::vector<RawGenerator>& gens,
                               const std::vector<std::vector<RawRelationLetter>>& relations,
                               const std::vector<std::string>& order) {
    if (gens.empty()) throw Error(ErrorCode::validation, "presentation has no generators");
    std::map<std::string, size_t> input_index;
    for (size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].id.empty()) throw Error(ErrorCode::validation, "generator with empty id");
        if (!input_index.emplace(gens[k].id, k).second)
            throw Error(ErrorCode::validation, "duplicate generator id", gens[k].id);
    }
    std::vector<size_t> ranked;  // input indices from smallest to largest
    if (order.empty()) {
        for (size_t k = 0; k < gens.size(); ++k) ranked.push_back(k);
    } else {
        std::set<std::string> seen;
        for (const auto& id : order) {
            auto it = input_index.find(id);
            if (it == input_index.end()) throw Error(ErrorCode::validation, "order names an unknown generator", id);
            if (!seen.insert(id).second) throw Error(ErrorCode::validation, "order repeats a generator", id);
            ranked.push_back(it->second);
        }
        if (ranked.size() != gens.size())
            throw Error(ErrorCode::validation, "order must list every generator exactly once");
    }

    std::set<std::pair<std::string, int>> used;
    std::set<std::string> arcs;
    for (const auto& g : gens)
        for (const Endpoint* e : {&g.source, &g.target}) {
            if (e->arc.empty()) throw Error(ErrorCode::validation, "endpoint without boundary arc", g.id);
            if (!used.emplace(e->arc, e->pos).second)
                throw Error(ErrorCode::validation, "two endpoints share a boundary position",
                            e->arc + ":" + std::to_string(e->pos));
            arcs.insert(e->arc);
        }

    Presentation p;
    p.boundary_arcs.assign(arcs.begin(), arcs.end());
    std::vector<size_t> position_of(gens.size());
    for (size_t r = 0; r < ranked.size(); ++r) {
        const RawGenerator& raw = gens[ranked[r]];
        GeneratorArc g;
        g.id = raw.id;
        g.source = raw.source;
        g.target = raw.target;
        g.height = raw.source.arc == raw.target.arc ? raw.height : Height::unset;
        g.type = classify_type(g.source, g.target, g.height);
        if (g.type == ArcType::b || g.type == ArcType::e) {
            std::swap(g.source, g.target);
            g.height = flip(g.height);
            g.type = orientation_image(g.type);
            g.reversed = true;
        }
        g.order_index = static_cast<int>(r);
        position_of[ranked[r]] = r;
        p.generators.push_back(std::move(g));
    }
    for (const auto& rel : relations) {
        std::vector<RelLetter> word;
        for (const auto& l : rel) {
            auto it = input_index.find(l.id);
            if (it == input_index.end()) throw Error(ErrorCode::validation, "relation names an unknown generator", l.id);
            size_t g = position_of[it->second];
            word.push_back({g, l.inverse != p.generators[g].reversed});
        }
        p.relations.push_back(std::move(word));
    }
    check_relations(p);
    return p;
}

Presentation height_flipped(const Presentation& p) {
    Presentation r = p;
    for (auto& g : r.generators) {
        if (g.type == ArcType::a) continue;
        g.height = flip(g.height);
        g.type = height_image(g.type);
    }
    return r;
}

Presentation drop_generators(const Presentation& p, const std::vector<size_t>& removed) {
    Presentation r;
    std::set<std::string> arcs;
    for (size_t g = 0; g < p.generators.size(); ++g) {
        if (std::find(removed.begin(), removed.end(), g) != removed.end()) continue;
        GeneratorArc a = p.generators[g];
        a.order_index = static_cast<int>(r.generators.size());
        arcs.insert(a.source.arc);
        arcs.insert(a.target.arc);
        r.generators.push_back(std::move(a));
    }
    r.boundary_arcs.assign(arcs.begin(), arcs.end());
    return r;
}

PMat m_matrix(const Presentation& p, size_t gen) {
    PMat m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = NCPoly::letter(p.letter(gen, 2 * j + i));
    return m;
}

namespace {

PMat P(const LMat& x) { return lift<NCPoly>(x); }

}  // namespace

PMat n_from_m(ArcType t, const PMat& m) {
    const auto& k = constants();
    switch (t) {
        case ArcType::a: return m;
        case ArcType::b: return m * P(k.C);
        case ArcType::c: return m * P(transpose(k.C));
        case ArcType::d: return P(k.Cinv) * m;
        case ArcType::e: return P(transpose(k.Cinv)) * m;
    }
    return m;
}

ArcView view(const Presentation& p, size_t gen) {
    const auto& g = p.generators[gen];
    return ArcView{gen, g.source, g.target, g.type, m_matrix(p, gen), {}};
}

ArcView reverse_orientation(const ArcView& v) {
    ArcView r = v;
    std::swap(r.source, r.target);
    r.type = orientation_image(v.type);
    r.m = transpose(v.m);
    r.moves.push_back(Move::orientation);
    return r;
}

ArcView reverse_height(const ArcView& v) {
    const auto& k = constants();
    const PMat C = P(k.C), Ci = P(k.Cinv), Ct = P(transpose(k.C)), Cit = P(transpose(k.Cinv));
    const PMat R = P(k.R), Ri = P(k.Rinv);
    ArcView r = v;
    r.type = height_image(v.type);
    switch (v.type) {
        case ArcType::b: r.m = trace_right(Ri * kron(Cit, v.m * Ct)); break;
        case ArcType::c: r.m = trace_left(Ri * kron(v.m * C, Ci)); break;
        case ArcType::d: r.m = trace_left(kron(Cit * v.m, Ct) * R); break;
        case ArcType::e: r.m = trace_right(kron(C, Ci * v.m) * R); break;
        default: break;
    }
    r.moves.push_back(Move::height);
    return r;
}

std::string case_name(Case c) {
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"};
    return names[static_cast<int>(c) - 1];
}

std::optional<Case> pattern(const ArcView& A, const ArcView& B) {
    const std::string &a = A.source.arc, &b = A.target.arc, &c = B.source.arc, &d = B.target.arc;
    const int as = A.source.pos, at = A.target.pos, bs = B.source.pos, bt = B.target.pos;
    const bool la = A.type == ArcType::a, lb = B.type == ArcType::a;
    if (la && lb) {
        std::set<std::string> all{a, b, c, d};
        if (all.size() == 4) return Case::i;
        if (a == c && std::set<std::string>{a, b, d}.size() == 3 && bs < as) return Case::ii;
        if (a == c && b == d && a != b && bs < as) return at < bt ? Case::iii : Case::iv;
        return std::nullopt;
    }
    if (la && !lb) {
        if (c != a && c != b) return Case::i;
        if (b == c && a != b) {
            if (B.type == ArcType::d && bs < bt && bt < at) return Case::v;
            if (B.type == ArcType::b && at < bt && bt < bs) return Case::vi;
            if (B.type == ArcType::b && bt < at && at < bs) return Case::vii;
        }
        return std::nullopt;
    }
    if (!la && lb) {
        if (a != c && a != d) return Case::i;
        return std::nullopt;
    }
    if (a != c) return Case::i;
    if (A.type == ArcType::d && B.type == ArcType::d) {
        if (bs < as && as < bt && bt < at) return Case::viii;
        if (bs < bt && bt < as && as < at) return Case::ix;
        if (as < bs && bs < bt && bt < at) return Case::x;
    }
    return std::nullopt;
}

namespace {

std::vector<ArcView> transforms(const ArcView& v) {
    std::vector<ArcView> out{v, reverse_orientation(v)};
    if (v.type != ArcType::a) {
        out.push_back(reverse_height(v));
        out.push_back(reverse_height(reverse_orientation(v)));
        out.push_back(reverse_orientation(reverse_height(v)));
    }
    return out;
}

std::string moves_text(const std::vector<Move>& m) {
    std::string s;
    for (Move x : m) s += x == Move::orientation ? 'o' : 'h';
    return s.empty() ? "-" : s;
}

}  // namespace

std::string Match::recipe() const { return "alpha:" + moves_text(alpha.moves) + " beta:" + moves_text(beta.moves); }

Match match_configuration(const Presentation& p, size_t big, size_t small) {
    if (big == small) throw Error(ErrorCode::validation, "exchange needs two distinct generators");
    const ArcView vb = view(p, big), vs = view(p, small);
    for (bool swapped : {false, true}) {
        const auto xs = transforms(swapped ? vs : vb);
        const auto ys = transforms(swapped ? vb : vs);
        // Fewest moves first; ties keep the enumeration order.
        std::vector<std::pair<size_t, size_t>> cand;
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = 0; j < ys.size(); ++j) cand.emplace_back(i, j);
        std::stable_sort(cand.begin(), cand.end(), [&](auto l, auto r) {
            return xs[l.first].moves.size() + ys[l.second].moves.size() <
                   xs[r.first].moves.size() + ys[r.second].moves.size();
        });
        for (auto [i, j] : cand)
            if (auto c = pattern(xs[i], ys[j])) return Match{*c, swapped, xs[i], ys[j]};
    }
    throw Error(ErrorCode::validation, "no exchange configuration matches this pair",
                p.generators[big].id + ", " + p.generators[small].id);
}

std::pair<PMat, PMat> case_equation(const Match& m) {
    const auto& k = constants();
    const PMat R = P(k.R), Ri = P(k.Rinv), tau = P(k.tau), one = P(k.I2);
    const PMat Na = m.alpha.n();
    const PMat Nb = m.beta.n();
    switch (m.kase) {
        case Case::i: return {kron(Na, Nb), tau * kron(Nb, Na) * tau};
        case Case::ii: return {kron(Na, Nb), tau * kron(Nb, Na) * R};
        case Case::iii: return {kron(Na, Nb), Ri * kron(Nb, Na) * R};
        case Case::iv: return {kron(Na, Nb), R * kron(Nb, Na) * R};
        case Case::v: {
            const PMat Nt = m.beta.m * P(k.C);
            return {kron(Na, Nt), R * kron(Nt, one) * Ri * kron(Na, one)};
        }
        case Case::vi: return {kron(Na, Nb), Ri * kron(Nb, one) * R * kron(Na, one)};
        case Case::vii: return {kron(Na, Nb), R * kron(Nb, one) * R * kron(Na, one)};
        case Case::viii: {
            const PMat a1 = kron(one, Na), b1 = kron(one, Nb);
            return {a1 * Ri * b1 * Ri, R * b1 * Ri * a1};
        }
        case Case::ix: {
            const PMat a1 = kron(one, Na), b1 = kron(one, Nb);
            return {Ri * a1 * R * b1, b1 * Ri * a1 * R};
        }
        case Case::x: {
            const PMat a1 = kron(one, Na), b1 = kron(one, Nb);
            return {a1 * Ri * b1 * R, R * b1 * Ri * a1};
        }
    }
    throw Error(ErrorCode::derivation, "unknown case");
}

}  // namespace skein
