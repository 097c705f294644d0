#pragma once

#include "trinom/types.hpp"

#include <utility>

namespace trinom {

// Fraction-free Bareiss elimination. Exact for Integer and Rational.
template <class Scalar>
Scalar determinant(Mat<Scalar> m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw DomainError("determinant: matrix not square");
    if (n == 0) return Scalar(1);
    Scalar prev = 1;
    int flips = 0;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return Scalar(0);
            m.row(k).swap(m.row(piv));
            ++flips;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    return (flips % 2) ? Scalar(-det) : det;
}

// Characteristic polynomial det(X I - M), ascending coefficients, monic.
// Faddeev-LeVerrier over the rationals.
template <class Scalar>
Vec<Rational> characteristic_polynomial(const Mat<Scalar>& m_in) {
    const Eigen::Index n = m_in.rows();
    Mat<Rational> m = m_in.template cast<Rational>();
    Vec<Rational> c(n + 1);
    c(n) = 1;
    Mat<Rational> mk = Mat<Rational>::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        Mat<Rational> step = mk;
        for (Eigen::Index i = 0; i < n; ++i) step(i, i) += c(n - k + 1);
        mk = m * step;
        c(n - k) = -mk.trace() / Rational(k);
    }
    return c;
}

// Solve A x = rhs exactly by Gauss-Jordan over the rationals.
// Throws DomainError when A is singular.
Vec<Rational> solve_exact(Mat<Rational> a, Vec<Rational> rhs);

// Hermite normal form of a square nonsingular integer matrix acting on
// columns: the result H = M U (U unimodular) is upper triangular with
// positive diagonal and 0 <= H(i,j) < H(i,i) for j > i.
Mat<Integer> hermite_normal_form(const Mat<Integer>& m);

}  // namespace trinom
