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

#include "skein/matrix.hpp"

namespace skein {

namespace {

Constants make_constants() {
    Constants k;
    const Laurent A = A_(), Ai = A_(-1);
    k.I2 = LMat::identity(2);
    k.I4 = LMat::identity(4);

    k.C = LMat(2, 2);
    k.C(0, 1) = Laurent::w(1);
    k.C(1, 0) = -Laurent::w(5);

    k.Cinv = LMat(2, 2);
    k.Cinv(0, 1) = -Laurent::w(-5);
    k.Cinv(1, 0) = Laurent::w(-1);

    k.R = LMat(4, 4);
    k.R(0, 0) = A;
    k.R(1, 2) = Ai;
    k.R(2, 1) = Ai;
    k.R(2, 2) = A - A_(-3);
    k.R(3, 3) = A;

    k.Rinv = LMat(4, 4);
    k.Rinv(0, 0) = Ai;
    k.Rinv(1, 1) = Ai - A_(3);
    k.Rinv(1, 2) = A;
    k.Rinv(2, 1) = A;
    k.Rinv(3, 3) = Ai;

    k.tau = LMat(4, 4);
    k.tau(0, 0) = 1;
    k.tau(1, 2) = 1;
    k.tau(2, 1) = 1;
    k.tau(3, 3) = 1;
    return k;
}

}  // namespace

const Constants& constants() {
    static const Constants k = make_constants();
    return k;
}

std::pair<LMat, LMat> yang_baxter_sides() {
    const auto& k = constants();
    LMat r1 = kron(k.R, k.I2), r2 = kron(k.I2, k.R);
    return {r1 * r2 * r1, r2 * r1 * r2};
}

}  // namespace skein
