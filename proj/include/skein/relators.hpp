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

#ifndef SKEIN_RELATORS_HPP
#define SKEIN_RELATORS_HPP

#include <string>
#include <vector>

#include "skein/presentation.hpp"
#include "skein/rewrite.hpp"

namespace skein {

using NCRule = Rule<Laurent>;

// The seven rules among one generator's stated generators (types a, c, d).
std::vector<NCRule> same_generator_relators(const Presentation& p, size_t gen);

struct ExchangeDerivation {
    Match match;
    PMat lhs, rhs;  // case equation
    std::vector<NCRule> rules;
};

// Sixteen rules alpha_ab beta_cd -> sum beta_ij alpha_kl for big > small.
ExchangeDerivation exchange_relators(const Presentation& p, size_t big, size_t small);

// Substitutes the derived rules into the case equation; true when every
// entry of lhs - rhs becomes exactly zero.
bool back_substitution_holds(const ExchangeDerivation& d);

// det_q(N) - 1 for type a; for types c and d the q^2-determinant in the form
// that holds for the dressed matrix of that type.
NCPoly qdet_relator(const Presentation& p, size_t gen);

// C M(b_k) C^-1 M(b_{k-1}) ... C^-1 M(b_1); inverse letters use the transpose
// and must be of type a.
PMat trivial_loop_matrix(const Presentation& p, const std::vector<RelLetter>& word);

// Relators of all generators and pairs; relations of p are ignored.
NCSystem build_rewrite_system(const Presentation& p);

// Applies a letter substitution to a polynomial.
NCPoly substitute(const NCPoly& x, const std::vector<std::optional<NCPoly>>& sub);

}  // namespace skein

#endif
