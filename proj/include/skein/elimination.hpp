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

#ifndef SKEIN_ELIMINATION_HPP
#define SKEIN_ELIMINATION_HPP

#include <string>
#include <vector>

#include "skein/presentation.hpp"
#include "skein/relators.hpp"

namespace skein {

/*
    Reflection anti-involution: bar on coefficients, reversed words, and each
    stated generator sent to the same state of its arc in height_flipped(p).
    Applying it twice (with the flipped presentation) is the identity.
*/
NCPoly reflection_theta(const NCPoly& x, const Presentation& p);

// Every entry of trivial_loop_matrix(word) - I reduces to 0 in rs.
bool loop_identity_check(const Presentation& p, const std::vector<RelLetter>& word, const NCSystem& rs);

struct Elimination {
    Presentation reduced;  // no relations
    // Indexed by letters of the input presentation; set for removed ones,
    // expressed over the letters of `reduced`.
    std::vector<std::optional<NCPoly>> substitution;
    // Letter of the input presentation -> letter of `reduced`, for survivors.
    std::vector<std::optional<Letter>> relabel;
    std::vector<std::string> removed;
};

/*
    Removes choice[r] using relation r by isolating its matrix in the trivial
    loop identity. Every other letter of the relation must be of type a, and
    a removed generator may occur in one relation only, exactly once.
*/
Elimination eliminate_generators(const Presentation& p, const std::vector<std::string>& choice);

// Transports x over the input presentation to the reduced alphabet.
NCPoly transport(const Elimination& e, const NCPoly& x);

// Rules of the input presentation whose transported relator does not reduce
// to 0 in the reduced system. Empty means the elimination is consistent.
std::vector<std::string> transported_failures(const Presentation& p, const Elimination& e);

}  // namespace skein

#endif
