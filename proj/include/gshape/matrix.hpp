#pragma once

// Small fixed-size dense matrix helpers used by the Gram computations.

#include <array>
#include <cmath>
#include <cstddef>

namespace gshape {

template <std::size_t N>
using Mat = std::array<std::array<double, N>, N>;

using Mat8 = Mat<8>;
using Mat6 = Mat<6>;

template <std::size_t N>
Mat<N> matmul(const Mat<N>& a, const Mat<N>& b) {
    Mat<N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            const double aik = a[i][k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < N; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

template <std::size_t N>
Mat<N> transpose(const Mat<N>& a) {
    Mat<N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r[j][i] = a[i][j];
    return r;
}

template <std::size_t N>
double max_abs(const Mat<N>& a) {
    double m = 0.0;
    for (const auto& row : a)
        for (double v : row) m = std::max(m, std::abs(v));
    return m;
}

/// max |a - b| / max(1, max|a|, max|b|).
template <std::size_t N>
double max_rel_diff(const Mat<N>& a, const Mat<N>& b) {
    const double scale = std::max({1.0, max_abs(a), max_abs(b)});
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m / scale;
}

/// Determinant by Gaussian elimination with partial pivoting.
template <std::size_t N>
double determinant(Mat<N> a) {
    double det = 1.0;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (a[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < N; ++r) {
            const double factor = a[r][col] / a[col][col];
            if (factor == 0.0) continue;
            for (std::size_t j = col; j < N; ++j) a[r][j] -= factor * a[col][j];
        }
    }
    return det;
}

/// Solves a*x = b in place; returns false when a is numerically singular.
template <std::size_t N>
bool solve(Mat<N> a, Mat<N> b, Mat<N>& out) {
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (a[pivot][col] == 0.0) return false;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        const double inv = 1.0 / a[col][col];
        for (std::size_t j = 0; j < N; ++j) {
            a[col][j] *= inv;
            b[col][j] *= inv;
        }
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col) continue;
            const double factor = a[r][col];
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < N; ++j) {
                a[r][j] -= factor * a[col][j];
                b[r][j] -= factor * b[col][j];
            }
        }
    }
    out = b;
    return true;
}

}  // namespace gshape
