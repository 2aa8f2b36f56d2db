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

#ifndef SKEIN_LINSOLVE_HPP
#define SKEIN_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "skein/matrix.hpp"

namespace skein {

struct Solution {
    // T * x = B with x = numerators / denominator. When every entry divides
    // exactly, `exact` holds the Laurent solution.
    Laurent denominator;
    LMat numerators;
    std::optional<LMat> exact;
};

// Fraction-free Gauss-Jordan on [T | B]. Throws a derivation error carrying
// the rank when T is singular.
Solution solve_fraction_free(const LMat& t, const LMat& b);

// Basis of the right kernel of m over Q(w), each vector scaled to a primitive
// Laurent vector (no common polynomial factor, lowest exponent 0 in the gcd
// sense, first nonzero entry with positive leading coefficient).
std::vector<std::vector<Laurent>> kernel_basis(const LMat& m);

size_t rank(const LMat& m);

// Exact rank over Q.
size_t rank_rational(std::vector<std::vector<mpq_class>> m);

}  // namespace skein

#endif
