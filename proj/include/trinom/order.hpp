#pragma once

#include "trinom/params.hpp"
#include "trinom/types.hpp"

#include <initializer_list>

namespace trinom {

// x_0 + x_1 theta + ... + x_{d-1} theta^{d-1} with theta^d = b - a theta^t.
// Scalar is Integer for order elements proper, Rational for the divided
// lattices of the Voronoi algorithm.
template <class Scalar>
class Element {
public:
    Element(const TrinomialParams& params, Vec<Scalar> coords);
    Element(const TrinomialParams& params, std::initializer_list<Scalar> coords);

    static Element zero(const TrinomialParams& params);
    static Element one(const TrinomialParams& params);
    static Element theta(const TrinomialParams& params);
    static Element rational(const TrinomialParams& params, const Scalar& q);

    const TrinomialParams& params() const { return params_; }
    const Vec<Scalar>& coords() const { return coords_; }
    const Scalar& operator[](Eigen::Index i) const { return coords_(i); }
    unsigned degree() const { return params_.degree(); }

    bool is_zero() const;
    bool is_rational() const;  // only the constant coordinate is nonzero

    Element operator-() const { return Element(params_, Vec<Scalar>(-coords_)); }
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& s) {
        coords_ *= s;
        return *this;
    }

    friend Element operator+(Element x, const Element& y) { return x += y; }
    friend Element operator-(Element x, const Element& y) { return x -= y; }
    friend Element operator*(Element x, const Scalar& s) { return x *= s; }
    friend Element operator*(const Scalar& s, Element x) { return x *= s; }
    friend bool operator==(const Element& x, const Element& y) {
        return x.params_ == y.params_ && x.coords_ == y.coords_;
    }

    template <class Other>
    Element<Other> cast() const {
        return Element<Other>(params_, coords_.template cast<Other>());
    }

    std::string str() const;  // "x + y*t + z*t^2", t for theta

private:
    TrinomialParams params_;
    Vec<Scalar> coords_;
};

using OrderElement = Element<Rational>;
using IntElement = Element<Integer>;

// Integer element from a rational one; DomainError if a coordinate is
// not integral.
IntElement to_integral(const OrderElement& e);

template <class Scalar>
Element<Scalar> multiply(const Element<Scalar>& e1, const Element<Scalar>& e2);

template <class Scalar>
Element<Scalar> operator*(const Element<Scalar>& e1, const Element<Scalar>& e2) {
    return multiply(e1, e2);
}

template <class Scalar>
Element<Scalar> power(const Element<Scalar>& e, unsigned k);

// Column j holds the coordinates of e * theta^j.
template <class Scalar>
Mat<Scalar> regular_representation(const Element<Scalar>& e);

// Cubic: closed form x*C0 + b*(y*C2 + z*C1) with C = complement(e).
// Other degrees: the resultant below.
template <class Scalar>
Scalar norm(const Element<Scalar>& e);

// Res(P, Q) where Q(X) = sum x_i X^i represents e. Always available.
template <class Scalar>
Scalar norm_resultant(const Element<Scalar>& e);

// e' e'' for cubic elements (product of the two other conjugates).
template <class Scalar>
Element<Scalar> complement(const Element<Scalar>& e);

template <class Scalar>
Scalar trace(const Element<Scalar>& e);

OrderElement invert(const OrderElement& e);
OrderElement invert(const IntElement& e);

// N(e) = +-1; DomainError if e has a non-integral coordinate.
bool is_unit(const OrderElement& e);
bool is_unit(const IntElement& e);

// Characteristic polynomial of multiplication by e, ascending monic;
// deflated to X - q when e = q is rational.
Vec<Integer> minimal_polynomial(const IntElement& e);

// Generalised power-by-norm unit U = (-1)^(d-1) (1 - v theta^t) of the
// trinomial X^d + a X^t - b with a = v b, together with N(U) computed as
// a resultant.
struct PowerByNormUnit {
    unsigned d = 3, t = 1;
    Integer a, b, v;
    Vec<Integer> coords;  // power basis, length d
    Integer norm;
};

PowerByNormUnit power_by_norm_unit(unsigned d, unsigned t, const Integer& a, const Integer& b);
PowerByNormUnit power_by_norm_unit(const TrinomialParams& params);

// e^d / N(e) is a unit of Z[theta], d the degree.
bool is_ambiguous_principal_generator(const IntElement& e);

// b * theta^-1 has integral coordinates and equals complement(theta).
bool principal_ideal_absorption_check(const TrinomialParams& params);

extern template class Element<Integer>;
extern template class Element<Rational>;
extern template Element<Integer> multiply(const Element<Integer>&, const Element<Integer>&);
extern template Element<Rational> multiply(const Element<Rational>&, const Element<Rational>&);
extern template Element<Integer> power(const Element<Integer>&, unsigned);
extern template Element<Rational> power(const Element<Rational>&, unsigned);
extern template Mat<Integer> regular_representation(const Element<Integer>&);
extern template Mat<Rational> regular_representation(const Element<Rational>&);
extern template Integer norm(const Element<Integer>&);
extern template Rational norm(const Element<Rational>&);
extern template Integer norm_resultant(const Element<Integer>&);
extern template Rational norm_resultant(const Element<Rational>&);
extern template Element<Integer> complement(const Element<Integer>&);
extern template Element<Rational> complement(const Element<Rational>&);
extern template Integer trace(const Element<Integer>&);
extern template Rational trace(const Element<Rational>&);

}  // namespace trinom
