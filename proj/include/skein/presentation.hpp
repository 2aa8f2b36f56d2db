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

#ifndef SKEIN_PRESENTATION_HPP
#define SKEIN_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "skein/matrix.hpp"
#include "skein/ncpoly.hpp"

namespace skein {

enum class ArcType : char { a = 'a', b = 'b', c = 'c', d = 'd', e = 'e' };
enum class Height { unset, source_above, target_above };

struct Endpoint {
    std::string arc;
    int pos = 0;
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct GeneratorArc {
    std::string id;
    Endpoint source, target;
    Height height = Height::unset;
    ArcType type = ArcType::a;
    int order_index = 0;
    // Set when the input arc was replaced by its inverse during normalization.
    bool reversed = false;
};

struct RelLetter {
    size_t gen = 0;
    bool inverse = false;
};

// States: + = 0, - = 1; state pair index 2 * (source sign) + (target sign).
enum State : int { pp = 0, pm = 1, mp = 2, mm = 3 };
const char* state_name(int s);
int state_from_name(const std::string& s);

/*
    Groupoid presentation with typed generators sorted by order index. Stated
    generator letters are 4 * order_index + rank, where the rank follows
    pp, pm, mp, mm except for type d arcs, which rank pp, mp, pm, mm.
*/
class Presentation {
   public:
    std::vector<std::string> boundary_arcs;
    std::vector<GeneratorArc> generators;
    std::vector<std::vector<RelLetter>> relations;

    size_t index_of(const std::string& id) const;
    Letter letter(size_t gen, int state) const;
    size_t gen_of(Letter x) const { return x / 4; }
    int state_of(Letter x) const;
    Alphabet alphabet() const;
    size_t letters() const { return 4 * generators.size(); }
};

ArcType classify_type(const Endpoint& s, const Endpoint& t, Height h);

// Raw input before typing and normalization.
struct RawGenerator {
    std::string id;
    Endpoint source, target;
    Height height = Height::unset;
};

struct RawRelationLetter {
    std::string id;
    bool inverse = false;
};

/*
    Validates and types the input. Generators of type b and e are replaced by
    their inverses (types c and d); relation letters are flipped to match.
    `order` lists generator ids from smallest to largest; empty means input
    order.
*/
Presentation make_presentation(const std::vector<RawGenerator>& gens,
                               const std::vector<std::vector<RawRelationLetter>>& relations,
                               const std::vector<std::string>& order = {});

// Same generators with the height order reversed on every same-arc generator.
Presentation height_flipped(const Presentation& p);

// Presentation without the listed generators and without relations.
Presentation drop_generators(const Presentation& p, const std::vector<size_t>& removed);

using PMat = Mat<NCPoly>;

// M(alpha): entry (i, j) is alpha_{ji}; rows index the target state.
PMat m_matrix(const Presentation& p, size_t gen);

PMat n_from_m(ArcType t, const PMat& m);

enum class Move { orientation, height };

/*
    An arc seen through a sequence of reversals. `m` expresses the transformed
    arc's M-matrix in the original stated generators.
*/
struct ArcView {
    size_t gen = 0;
    Endpoint source, target;
    ArcType type = ArcType::a;
    PMat m;
    std::vector<Move> moves;

    PMat n() const { return n_from_m(type, m); }
};

ArcView view(const Presentation& p, size_t gen);
ArcView reverse_orientation(const ArcView& v);
ArcView reverse_height(const ArcView& v);  // types b..e only

ArcType orientation_image(ArcType t);
ArcType height_image(ArcType t);

enum class Case { i = 1, ii, iii, iv, v, vi, vii, viii, ix, x };
std::string case_name(Case c);

struct Match {
    Case kase = Case::i;
    bool swapped = false;  // true when the smaller generator plays alpha
    ArcView alpha, beta;
    std::string recipe() const;
};

// Endpoint pattern test for one role assignment, without transforms.
std::optional<Case> pattern(const ArcView& a, const ArcView& b);

// Search roles and reversal moves; throws a validation error when nothing fits.
Match match_configuration(const Presentation& p, size_t big, size_t small);

// Case equation L = R as 4x4 matrices over the stated generators.
std::pair<PMat, PMat> case_equation(const Match& m);

}  // namespace skein

#endif
