#include "trinom/linalg.hpp"

namespace trinom {

Vec<Rational> solve_exact(Mat<Rational> a, Vec<Rational> rhs) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || rhs.size() != n) throw DomainError("solve_exact: shape mismatch");
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) throw DomainError("solve_exact: singular matrix");
        if (piv != k) {
            a.row(k).swap(a.row(piv));
            std::swap(rhs(k), rhs(piv));
        }
        const Rational inv = 1 / a(k, k);
        a.row(k) *= inv;
        rhs(k) *= inv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rational f = a(i, k);
            a.row(i) -= f * a.row(k);
            rhs(i) -= f * rhs(k);
        }
    }
    return rhs;
}

namespace {

// Extended gcd on signed integers: g = x*a + y*b, g >= 0.
void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

}  // namespace

Mat<Integer> hermite_normal_form(const Mat<Integer>& m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw DomainError("hermite_normal_form: square matrices only");
    Mat<Integer> h = m;
    // Bottom row first: clear row i left of the diagonal by column operations.
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            if (h(i, j) == 0) continue;
            Integer g, x, y;
            xgcd(h(i, i), h(i, j), g, x, y);
            const Integer p = h(i, i) / g, q = h(i, j) / g;
            Vec<Integer> ci = h.col(i), cj = h.col(j);
            h.col(i) = x * ci + y * cj;
            h.col(j) = p * cj - q * ci;
        }
        if (h(i, i) == 0) throw DomainError("hermite_normal_form: singular matrix");
        if (h(i, i) < 0) h.col(i) = -h.col(i);
    }
    // Reduce entries right of each diagonal into [0, h(i,i)); bottom-up so
    // that later rows only disturb rows above them.
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const Integer q = floor_div(h(i, j), h(i, i));
            if (q != 0) h.col(j) -= q * h.col(i);
        }
    }
    return h;
}

}  // namespace trinom
