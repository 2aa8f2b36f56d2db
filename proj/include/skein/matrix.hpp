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

#ifndef SKEIN_MATRIX_HPP
#define SKEIN_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/*
    Dense row-major matrix over a ring whose elements may not commute.
    Products keep the factor order: (XY)[i][j] = sum_k X[i][k] * Y[k][j].
*/
template <class T>
class Mat {
   public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend Mat operator+(Mat x, const Mat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        for (size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
        return x;
    }
    friend Mat operator-(Mat x, const Mat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        for (size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
        return x;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.cols_ == y.rows_);
        Mat r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == T()) continue;
                for (size_t j = 0; j < y.cols_; ++j)
                    if (!(y(k, j) == T())) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!(x == T())) return false;
        return true;
    }

   private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

template <class T>
Mat<T> transpose(const Mat<T>& x) {
    Mat<T> r(x.cols(), x.rows());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) r(j, i) = x(i, j);
    return r;
}

// Kronecker product, entry ((i,k),(j,l)) = X(i,j) * Y(k,l) in this order.
template <class T>
Mat<T> kron(const Mat<T>& x, const Mat<T>& y) {
    Mat<T> r(x.rows() * y.rows(), x.cols() * y.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j)
            for (size_t k = 0; k < y.rows(); ++k)
                for (size_t l = 0; l < y.cols(); ++l) r(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    return r;
}

// tr_L(X)[b][a] = sum_i X[(i,b)][(i,a)]
template <class T>
Mat<T> trace_left(const Mat<T>& x) {
    assert(x.rows() == 4 && x.cols() == 4);
    Mat<T> r(2, 2);
    for (size_t b = 0; b < 2; ++b)
        for (size_t a = 0; a < 2; ++a)
            for (size_t i = 0; i < 2; ++i) r(b, a) += x(2 * i + b, 2 * i + a);
    return r;
}

// tr_R(X)[b][a] = sum_i X[(b,i)][(a,i)]
template <class T>
Mat<T> trace_right(const Mat<T>& x) {
    assert(x.rows() == 4 && x.cols() == 4);
    Mat<T> r(2, 2);
    for (size_t b = 0; b < 2; ++b)
        for (size_t a = 0; a < 2; ++a)
            for (size_t i = 0; i < 2; ++i) r(b, a) += x(2 * b + i, 2 * a + i);
    return r;
}

template <class T, class S>
Mat<T> lift(const Mat<S>& x) {
    Mat<T> r(x.rows(), x.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) r(i, j) = T(x(i, j));
    return r;
}

using LMat = Mat<Laurent>;

inline LMat scaled(LMat x, const Laurent& s) {
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) x(i, j) = s * x(i, j);
    return x;
}

inline LMat bar(const LMat& x) {
    LMat r(x.rows(), x.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j).bar();
    return r;
}

/*
    Structure constants. Sign index: + = 0, - = 1; pair index 2*i + k, so
    the 4x4 order is (++, +-, -+, --).
*/
struct Constants {
    LMat C, Cinv, R, Rinv, tau, I2, I4;
};

const Constants& constants();

// (R x I)(I x R)(R x I) and (I x R)(R x I)(I x R).
std::pair<Mat<Laurent>, Mat<Laurent>> yang_baxter_sides();

}  // namespace skein

#endif
