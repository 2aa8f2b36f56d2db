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

#ifndef SKEIN_EXPRESSION_HPP
#define SKEIN_EXPRESSION_HPP

#include <string_view>

#include "skein/ncpoly.hpp"

namespace skein {

/*
    Parses sums of products of stated generators `id[s]` (s in pp, pm, mp,
    mm), integers, `w`, `w^k` (k may be negative), parentheses and
    nonnegative integer powers. Products keep factor order. Errors carry the
    byte offset in their context.
*/
NCPoly parse_expression(std::string_view text, const Alphabet& ab);

}  // namespace skein

#endif
