#pragma once

#include "trinom/linalg.hpp"
#include "trinom/types.hpp"

#include <cstdint>

namespace trinom {

// Dense polynomials are coefficient vectors in ascending order.

template <class Scalar>
Eigen::Index degree(const Vec<Scalar>& p) {
    Eigen::Index d = p.size() - 1;
    while (d >= 0 && p(d) == 0) --d;
    return d;  // -1 for the zero polynomial
}

template <class Scalar>
Vec<Scalar> trim(const Vec<Scalar>& p) {
    Eigen::Index d = degree(p);
    if (d < 0) return Vec<Scalar>::Zero(1);
    return p.head(d + 1);
}

// Sylvester matrix of p (degree m) and q (degree n), size (m+n).
template <class Scalar>
Mat<Scalar> sylvester_matrix(const Vec<Scalar>& p_in, const Vec<Scalar>& q_in) {
    const Vec<Scalar> p = trim(p_in), q = trim(q_in);
    const Eigen::Index m = p.size() - 1, n = q.size() - 1;
    Mat<Scalar> s = Mat<Scalar>::Zero(m + n, m + n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= m; ++j) s(i, i + j) = p(m - j);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j <= n; ++j) s(n + i, i + j) = q(n - j);
    return s;
}

// Res(p, q) = lc(p)^deg(q) * prod q(alpha) over the roots alpha of p.
template <class Scalar>
Scalar resultant(const Vec<Scalar>& p, const Vec<Scalar>& q) {
    const Eigen::Index m = degree(p), n = degree(q);
    if (m < 0 || n < 0) return Scalar(0);
    if (n == 0) {
        Scalar c = q(0), out = 1;
        for (Eigen::Index i = 0; i < m; ++i) out *= c;
        return out;
    }
    if (m == 0) {
        Scalar c = p(0), out = 1;
        for (Eigen::Index i = 0; i < n; ++i) out *= c;
        return out;
    }
    return determinant<Scalar>(sylvester_matrix(p, q));
}

// Number of irreducible factors of each degree of (p mod prime), computed
// by distinct-degree factorisation. Index k holds the count of degree-k
// factors. Requires p squarefree mod prime and prime not dividing lc(p).
std::vector<unsigned> factor_degrees_mod(const Vec<Integer>& p, std::uint64_t prime);

// True when p is certified irreducible over Q. A rational root proves
// reducibility; otherwise degree patterns modulo small primes are
// intersected until only the trivial splitting survives. Throws
// DomainError if neither outcome is reached (degree > 3 only).
bool is_irreducible_over_q(const Vec<Integer>& p);

}  // namespace trinom
