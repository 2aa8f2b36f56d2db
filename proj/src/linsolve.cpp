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

#include "skein/linsolve.hpp"

#include "skein/error.hpp"

namespace skein {

namespace {

Laurent exact_div(const Laurent& a, const Laurent& d) {
    auto q = a.divide_exact(d);
    if (!q) throw Error(ErrorCode::derivation, "fraction-free elimination step is not exact", a.str() + " / " + d.str());
    return *q;
}

struct Echelon {
    LMat m;
    std::vector<size_t> pivot_cols;  // pivot column of row r
    Laurent d = 1;                   // common pivot value
};

// Fraction-free Gauss-Jordan over the first `ncols` columns; remaining
// columns are carried along.
Echelon reduce(LMat m, size_t ncols) {
    Echelon e;
    const size_t rows = m.rows(), cols = m.cols();
    Laurent prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows; ++c) {
        size_t p = r;
        // Prefer a monomial pivot to keep intermediate degrees small.
        size_t best = rows;
        for (size_t i = r; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            if (best == rows) best = i;
            if (m(i, c).is_monomial()) {
                best = i;
                break;
            }
        }
        if (best == rows) continue;
        p = best;
        if (p != r)
            for (size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Laurent piv = m(r, c);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Laurent f = m(i, c);
            for (size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                Laurent v = piv * m(i, j);
                if (!f.is_zero() && !m(r, j).is_zero()) v -= f * m(r, j);
                m(i, j) = prev.is_one() ? v : exact_div(v, prev);
            }
            m(i, c) = Laurent();
        }
        prev = piv;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.d = prev;
    e.m = std::move(m);
    return e;
}

}  // namespace

Solution solve_fraction_free(const LMat& t, const LMat& b) {
    const size_t n = t.rows();
    if (t.cols() != n || b.rows() != n)
        throw Error(ErrorCode::validation, "solve_fraction_free: dimension mismatch");
    LMat aug(n, n + b.cols());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = t(i, j);
        for (size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    Echelon e = reduce(std::move(aug), n);
    if (e.pivot_cols.size() < n)
        throw Error(ErrorCode::derivation, "singular system", "rank " + std::to_string(e.pivot_cols.size()) + " of " + std::to_string(n));
    Solution s;
    s.denominator = e.d;
    s.numerators = LMat(n, b.cols());
    LMat x(n, b.cols());
    bool ok = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
            s.numerators(i, j) = e.m(i, n + j);
            if (!ok) continue;
            auto q = e.m(i, n + j).divide_exact(e.d);
            if (q)
                x(i, j) = *q;
            else
                ok = false;
        }
    if (ok) s.exact = std::move(x);
    return s;
}

size_t rank(const LMat& m) { return reduce(m, m.cols()).pivot_cols.size(); }

std::vector<std::vector<Laurent>> kernel_basis(const LMat& m) {
    Echelon e = reduce(m, m.cols());
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Laurent>> out;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Laurent> v(n);
        v[f] = e.d;
        for (size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.m(r, f);
        Laurent g;
        for (const auto& x : v)
            if (!x.is_zero()) g = gcd(g, x);
        int shift = 0;
        bool first = true;
        for (const auto& x : v)
            if (!x.is_zero()) {
                shift = first ? x.low() : std::min(shift, x.low());
                first = false;
            }
        for (auto& x : v) {
            if (x.is_zero()) continue;
            auto q = x.divide_exact(g);
            x = q->shifted(-shift);
        }
        // Renormalize the exponent floor after the gcd division.
        int lo = 0;
        first = true;
        for (const auto& x : v)
            if (!x.is_zero()) {
                lo = first ? x.low() : std::min(lo, x.low());
                first = false;
            }
        for (auto& x : v) x = x.shifted(-lo);
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (x.coeffs().back() < 0)
                for (auto& y : v) y = -y;
            break;
        }
        out.push_back(std::move(v));
    }
    return out;
}

size_t rank_rational(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace skein
