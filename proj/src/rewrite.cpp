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

#include "skein/rewrite.hpp"

namespace skein {

std::string word_text(const Word& w, const Alphabet& ab) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += '*';
        out += w[i] < ab.size() ? ab.names[w[i]] : "?" + std::to_string(w[i]);
    }
    return out.empty() ? "1" : out;
}

QPoly specialize(const NCPoly& p, const mpq_class& w0) {
    return p.map_coeffs([&](const Laurent& c) { return c.evaluate(w0); });
}

mpz_class convolution_dimension(size_t generators, size_t n) {
    std::vector<mpz_class> acc(n + 1, 0), one(n + 1);
    acc[0] = 1;
    for (size_t k = 0; k <= n; ++k) one[k] = mpz_class((k + 1) * (k + 1));
    for (size_t g = 0; g < generators; ++g) {
        std::vector<mpz_class> next(n + 1, 0);
        for (size_t i = 0; i <= n; ++i)
            for (size_t j = 0; i + j <= n; ++j) next[i + j] += acc[i] * one[j];
        acc = std::move(next);
    }
    return acc[n];
}

QSystem specialize(const NCSystem& rs, const mpq_class& w0) {
    std::vector<Rule<mpq_class>> rules;
    for (const auto& r : rs.rules()) rules.push_back({r.lead, specialize(r.rhs, w0)});
    // At special points a right-hand side may lose terms but never gains larger words.
    return QSystem(rs.alphabet(), std::move(rules));
}

}  // namespace skein
