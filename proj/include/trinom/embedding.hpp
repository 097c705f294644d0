#pragma once

#include "trinom/numeric.hpp"
#include "trinom/order.hpp"

#include <complex>

namespace trinom {

long double to_long_double(const Integer& n);
long double to_long_double(const Rational& q);

// Real embedding theta -> root of real_root(), and for sigma=+1 cubics the
// complex embedding theta -> theta' with Im theta' > 0.
//
// Floating values are filters only. sign() is exact: it evaluates the
// element on the certified root interval and refines the interval until
// zero is excluded.
class Embedding {
public:
    explicit Embedding(const TrinomialParams& params);

    const TrinomialParams& params() const { return params_; }
    const RootInterval& root() const { return iv_; }
    unsigned refinements() const { return refinements_; }

    long double theta() const { return theta_; }
    long double real(const OrderElement& e) const;
    long double real(const IntElement& e) const;
    // Cubic, sigma=+1 only.
    std::complex<long double> conjugate(const OrderElement& e) const;
    // |e'|^2 = e' e''.
    long double conjugate_norm(const OrderElement& e) const { return std::norm(conjugate(e)); }

    // Sum of |coordinate| * |theta|^i, the size that filter margins scale with.
    long double magnitude(const OrderElement& e) const;

    // Exact sign of the real embedding.
    int sign(const OrderElement& e);
    // sign(x - y) with a floating filter in front.
    int compare(const OrderElement& x, const OrderElement& y);
    int compare(const OrderElement& x, const Rational& q);

private:
    int exact_sign(const OrderElement& e);

    TrinomialParams params_;
    Vec<Integer> poly_;
    RootInterval iv_;
    long double theta_ = 0;
    long double s_ = 0;  // Im theta'
    unsigned refinements_ = 0;
};

}  // namespace trinom
