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

#ifndef SKEIN_CLASSICAL_HPP
#define SKEIN_CLASSICAL_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "skein/io.hpp"
#include "skein/relators.hpp"

namespace skein {

// Parity per generator, indexed like p.generators.
using SpinFunction = std::vector<int>;

SpinFunction spin_from_map(const Presentation& p, const std::map<std::string, int>& w);

// Each relation word has odd total spin.
bool validate_spin(const Presentation& p, const SpinFunction& w);

/*
    Change of variables U(a) = (-1)^w(a) w C^-1 M(a) for type a arcs and
    U(a) = (-1)^w(a) C^-1 M(a) for type d. U-entries reuse the letters of p:
    U(a)(i, j) is the letter of state 2j + i, as for M.
*/
class UForm {
   public:
    UForm(const Presentation& p, SpinFunction w);

    const Presentation& presentation() const noexcept { return p_; }
    const SpinFunction& spin() const noexcept { return w_; }

    PMat u_in_m(size_t gen) const;  // U(a) over M-letters
    PMat m_in_u(size_t gen) const;  // M(a) over U-letters

    NCPoly to_u(const NCPoly& x_in_m) const;
    NCPoly to_m(const NCPoly& x_in_u) const;

    // det_q(U) - 1 (type a) or det_q^2(U) - 1 (type d), in U-letters.
    NCPoly qdet(size_t gen) const;
    // Entries of U(b_k)...U(b_1) - A^3 w^l I, in U-letters; no inverse letters.
    PMat loop(const std::vector<RelLetter>& word) const;

    /*
        Case equation of the pair with N replaced by U, reduced in rs. Only
        matches found without reversal moves are supported.
    */
    bool exchange_shape_holds(const NCSystem& rs, size_t big, size_t small) const;

   private:
    Presentation p_;
    SpinFunction w_;
    std::vector<std::optional<NCPoly>> to_u_, to_m_;
};

// Generator id -> SL2 matrix. Throws a validation error unless det = 1.
using SL2Point = std::map<std::string, QMat>;
void validate_point(const Presentation& p, const SL2Point& pt);

// Commutative substitution of U(a)(i, j) -> g_a(i, j) into a polynomial
// already specialized at w = 1.
mpq_class evaluate_at_point(const QPoly& x, const Presentation& p, const SL2Point& pt);

// Products of elementary shears with small rational parameters.
QMat random_sl2(std::mt19937& rng, int shears = 4);
SL2Point random_point(const Presentation& p, std::mt19937& rng);

// Cross-generator rules that are not plain commutators after specializing.
std::vector<std::string> non_commutator_exchange_rules(const Presentation& p, const QSystem& rs);

}  // namespace skein

#endif
