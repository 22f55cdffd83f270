// Dense matrices over a field object: product, inverse, determinant, kernel,
// linear solve.  Row-major storage; all algorithms are plain Gaussian
// elimination, which is exact over our fields.
#pragma once

#include <vector>

#include "gonal/util.hpp"

namespace gonal {

template <class F>
struct Mat {
    size_t m = 0, n = 0;
    std::vector<typename F::Elem> a;

    typename F::Elem& at(size_t i, size_t j) { return a[i * n + j]; }
    const typename F::Elem& at(size_t i, size_t j) const { return a[i * n + j]; }
};

template <class F>
Mat<F> mat_zero(const F& K, size_t m, size_t n) {
    Mat<F> r;
    r.m = m;
    r.n = n;
    r.a.assign(m * n, K.zero());
    return r;
}

template <class F>
Mat<F> mat_identity(const F& K, size_t n) {
    Mat<F> r = mat_zero(K, n, n);
    for (size_t i = 0; i < n; ++i) r.at(i, i) = K.one();
    return r;
}

template <class F>
Mat<F> mat_mul(const F& K, const Mat<F>& A, const Mat<F>& B) {
    GONAL_CHECK(A.n == B.m, "mat: shape mismatch");
    Mat<F> r = mat_zero(K, A.m, B.n);
    for (size_t i = 0; i < A.m; ++i)
        for (size_t k = 0; k < A.n; ++k) {
            if (K.is_zero(A.at(i, k))) continue;
            for (size_t j = 0; j < B.n; ++j) r.at(i, j) = K.add(r.at(i, j), K.mul(A.at(i, k), B.at(k, j)));
        }
    return r;
}

template <class F>
Mat<F> mat_transpose(const F& K, const Mat<F>& A) {
    Mat<F> r = mat_zero(K, A.n, A.m);
    for (size_t i = 0; i < A.m; ++i)
        for (size_t j = 0; j < A.n; ++j) r.at(j, i) = A.at(i, j);
    return r;
}

template <class F>
std::vector<typename F::Elem> mat_row(const Mat<F>& A, size_t i) {
    return std::vector<typename F::Elem>(A.a.begin() + long(i * A.n), A.a.begin() + long((i + 1) * A.n));
}

template <class F>
bool mat_eq(const F& K, const Mat<F>& A, const Mat<F>& B) {
    if (A.m != B.m || A.n != B.n) return false;
    for (size_t i = 0; i < A.a.size(); ++i)
        if (!K.eq(A.a[i], B.a[i])) return false;
    return true;
}

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<size_t> mat_rref(const F& K, Mat<F>& A) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < A.n && row < A.m; ++col) {
        size_t pr = row;
        while (pr < A.m && K.is_zero(A.at(pr, col))) ++pr;
        if (pr == A.m) continue;
        if (pr != row)
            for (size_t j = 0; j < A.n; ++j) std::swap(A.at(pr, j), A.at(row, j));
        typename F::Elem piv = K.inv(A.at(row, col));
        for (size_t j = col; j < A.n; ++j) A.at(row, j) = K.mul(piv, A.at(row, j));
        for (size_t i = 0; i < A.m; ++i) {
            if (i == row || K.is_zero(A.at(i, col))) continue;
            typename F::Elem f = A.at(i, col);
            for (size_t j = col; j < A.n; ++j) A.at(i, j) = K.sub(A.at(i, j), K.mul(f, A.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
size_t mat_rank(const F& K, Mat<F> A) {
    return mat_rref(K, A).size();
}

// Basis of the right kernel {v : A v = 0}, rows of the result.
template <class F>
Mat<F> mat_kernel(const F& K, Mat<F> A) {
    std::vector<size_t> piv = mat_rref(K, A);
    std::vector<char> is_piv(A.n, 0);
    for (size_t c : piv) is_piv[c] = 1;
    size_t dim = A.n - piv.size();
    Mat<F> ker = mat_zero(K, dim, A.n);
    size_t r = 0;
    for (size_t free = 0; free < A.n; ++free) {
        if (is_piv[free]) continue;
        ker.at(r, free) = K.one();
        for (size_t i = 0; i < piv.size(); ++i) ker.at(r, piv[i]) = K.neg(A.at(i, free));
        ++r;
    }
    return ker;
}

template <class F>
Mat<F> mat_inverse(const F& K, const Mat<F>& A) {
    GONAL_CHECK(A.m == A.n, "mat: inverse of non-square");
    Mat<F> W = mat_zero(K, A.m, 2 * A.n);
    for (size_t i = 0; i < A.m; ++i) {
        for (size_t j = 0; j < A.n; ++j) W.at(i, j) = A.at(i, j);
        W.at(i, A.n + i) = K.one();
    }
    std::vector<size_t> piv = mat_rref(K, W);
    GONAL_CHECK(piv.size() == A.n && piv.back() == A.n - 1, "mat: singular matrix");
    Mat<F> R = mat_zero(K, A.m, A.n);
    for (size_t i = 0; i < A.m; ++i)
        for (size_t j = 0; j < A.n; ++j) R.at(i, j) = W.at(i, A.n + j);
    return R;
}

template <class F>
typename F::Elem mat_det(const F& K, Mat<F> A) {
    GONAL_CHECK(A.m == A.n, "mat: det of non-square");
    typename F::Elem det = K.one();
    for (size_t col = 0; col < A.n; ++col) {
        size_t pr = col;
        while (pr < A.m && K.is_zero(A.at(pr, col))) ++pr;
        if (pr == A.m) return K.zero();
        if (pr != col) {
            for (size_t j = 0; j < A.n; ++j) std::swap(A.at(pr, j), A.at(col, j));
            det = K.neg(det);
        }
        det = K.mul(det, A.at(col, col));
        typename F::Elem piv = K.inv(A.at(col, col));
        for (size_t i = col + 1; i < A.m; ++i) {
            if (K.is_zero(A.at(i, col))) continue;
            typename F::Elem f = K.mul(piv, A.at(i, col));
            for (size_t j = col; j < A.n; ++j) A.at(i, j) = K.sub(A.at(i, j), K.mul(f, A.at(col, j)));
        }
    }
    return det;
}

// Solve x A = b for a row vector x (A square invertible).
template <class F>
std::vector<typename F::Elem> mat_solve_left(const F& K, const Mat<F>& A, const std::vector<typename F::Elem>& b) {
    GONAL_CHECK(A.m == A.n && b.size() == A.m, "mat: solve shape mismatch");
    // x A = b  <=>  A^T x^T = b^T
    Mat<F> W = mat_zero(K, A.n, A.n + 1);
    for (size_t i = 0; i < A.n; ++i) {
        for (size_t j = 0; j < A.m; ++j) W.at(i, j) = A.at(j, i);
        W.at(i, A.n) = b[i];
    }
    std::vector<size_t> piv = mat_rref(K, W);
    GONAL_CHECK(piv.size() == A.n && piv.back() == A.n - 1, "mat: singular system");
    std::vector<typename F::Elem> x(A.n, K.zero());
    for (size_t i = 0; i < A.n; ++i) x[i] = W.at(i, A.n);
    return x;
}

}  // namespace gonal
