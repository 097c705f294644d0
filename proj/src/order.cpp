#include "trinom/order.hpp"

#include "trinom/linalg.hpp"
#include "trinom/polynomial.hpp"

#include <sstream>

namespace trinom {

template <class Scalar>
Element<Scalar>::Element(const TrinomialParams& params, Vec<Scalar> coords)
    : params_(params), coords_(std::move(coords)) {
    if (coords_.size() != static_cast<Eigen::Index>(params_.degree()))
        throw DomainError("element: expected " + std::to_string(params_.degree()) + " coordinates");
}

template <class Scalar>
Element<Scalar>::Element(const TrinomialParams& params, std::initializer_list<Scalar> coords)
    : params_(params), coords_(Vec<Scalar>::Zero(params.degree())) {
    if (coords.size() > params_.degree()) throw DomainError("element: too many coordinates");
    Eigen::Index i = 0;
    for (const auto& c : coords) coords_(i++) = c;
}

template <class Scalar>
Element<Scalar> Element<Scalar>::zero(const TrinomialParams& params) {
    return Element(params, Vec<Scalar>(Vec<Scalar>::Zero(params.degree())));
}

template <class Scalar>
Element<Scalar> Element<Scalar>::one(const TrinomialParams& params) {
    return rational(params, Scalar(1));
}

template <class Scalar>
Element<Scalar> Element<Scalar>::theta(const TrinomialParams& params) {
    Element e = zero(params);
    e.coords_(1) = 1;
    return e;
}

template <class Scalar>
Element<Scalar> Element<Scalar>::rational(const TrinomialParams& params, const Scalar& q) {
    Element e = zero(params);
    e.coords_(0) = q;
    return e;
}

template <class Scalar>
bool Element<Scalar>::is_zero() const {
    for (Eigen::Index i = 0; i < coords_.size(); ++i)
        if (coords_(i) != 0) return false;
    return true;
}

template <class Scalar>
bool Element<Scalar>::is_rational() const {
    for (Eigen::Index i = 1; i < coords_.size(); ++i)
        if (coords_(i) != 0) return false;
    return true;
}

template <class Scalar>
Element<Scalar>& Element<Scalar>::operator+=(const Element& o) {
    if (!(params_ == o.params_)) throw DomainError("element: mismatched parameters");
    coords_ += o.coords_;
    return *this;
}

template <class Scalar>
Element<Scalar>& Element<Scalar>::operator-=(const Element& o) {
    if (!(params_ == o.params_)) throw DomainError("element: mismatched parameters");
    coords_ -= o.coords_;
    return *this;
}

template <class Scalar>
std::string Element<Scalar>::str() const {
    std::ostringstream os;
    bool first = true;
    for (Eigen::Index i = 0; i < coords_.size(); ++i) {
        const Scalar& c = coords_(i);
        if (c == 0) continue;
        Scalar mag = c < 0 ? Scalar(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        const std::string m = to_string(mag);
        const bool paren = m.find('/') != std::string::npos;
        if (i == 0) {
            os << m;
            continue;
        }
        if (mag != 1) os << (paren ? "(" + m + ")" : m) << "*";
        os << "t";
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

IntElement to_integral(const OrderElement& e) {
    Vec<Integer> c(e.coords().size());
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        if (!is_integral(e[i])) throw DomainError("element " + e.str() + " is not integral");
        c(i) = numerator(e[i]);
    }
    return IntElement(e.params(), c);
}

template <class Scalar>
Element<Scalar> multiply(const Element<Scalar>& e1, const Element<Scalar>& e2) {
    if (!(e1.params() == e2.params())) throw DomainError("multiply: mismatched parameters");
    const auto& P = e1.params();
    const Eigen::Index d = P.degree(), t = P.t();
    const Scalar a(P.a()), b(P.b());
    Vec<Scalar> c = Vec<Scalar>::Zero(2 * d - 1);
    for (Eigen::Index i = 0; i < d; ++i) {
        if (e1[i] == 0) continue;
        for (Eigen::Index j = 0; j < d; ++j) c(i + j) += e1[i] * e2[j];
    }
    // theta^k = theta^(k-d) (b - a theta^t)
    for (Eigen::Index k = 2 * d - 2; k >= d; --k) {
        if (c(k) == 0) continue;
        c(k - d) += b * c(k);
        c(k - d + t) -= a * c(k);
        c(k) = 0;
    }
    return Element<Scalar>(P, Vec<Scalar>(c.head(d)));
}

template <class Scalar>
Element<Scalar> power(const Element<Scalar>& e, unsigned k) {
    Element<Scalar> out = Element<Scalar>::one(e.params()), base = e;
    while (k) {
        if (k & 1u) out = multiply(out, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return out;
}

template <class Scalar>
Mat<Scalar> regular_representation(const Element<Scalar>& e) {
    const Eigen::Index d = e.degree();
    Mat<Scalar> m(d, d);
    Element<Scalar> col = e;
    const Element<Scalar> th = Element<Scalar>::theta(e.params());
    for (Eigen::Index j = 0; j < d; ++j) {
        m.col(j) = col.coords();
        if (j + 1 < d) col = multiply(col, th);
    }
    return m;
}

template <class Scalar>
Element<Scalar> complement(const Element<Scalar>& e) {
    if (!e.params().is_cubic()) throw DomainError("complement: cubic elements only");
    const Scalar a(e.params().a()), b(e.params().b());
    const Scalar &x = e[0], &y = e[1], &z = e[2];
    Vec<Scalar> c(3);
    c(0) = x * x + a * y * y + a * a * z * z - b * y * z - 2 * a * x * z;
    c(1) = b * z * z - x * y;
    c(2) = y * y + a * z * z - x * z;
    return Element<Scalar>(e.params(), c);
}

template <class Scalar>
Scalar norm_resultant(const Element<Scalar>& e) {
    const Vec<Scalar> p = e.params().polynomial().template cast<Scalar>();
    return resultant<Scalar>(p, e.coords());
}

template <class Scalar>
Scalar norm(const Element<Scalar>& e) {
    if (!e.params().is_cubic()) return norm_resultant(e);
    const Element<Scalar> c = complement(e);
    const Scalar b(e.params().b());
    return e[0] * c[0] + b * (e[1] * c[2] + e[2] * c[1]);
}

template <class Scalar>
Scalar trace(const Element<Scalar>& e) {
    if (e.params().is_cubic()) return 3 * e[0] - 2 * Scalar(e.params().a()) * e[2];
    return regular_representation(e).trace();
}

OrderElement invert(const OrderElement& e) {
    if (e.params().is_cubic()) {
        const Rational n = norm(e);
        if (n == 0) throw DomainError("invert: zero element");
        OrderElement c = complement(e);
        c *= Rational(1) / n;
        return c;
    }
    if (e.is_zero()) throw DomainError("invert: zero element");
    Vec<Rational> rhs = Vec<Rational>::Zero(e.degree());
    rhs(0) = 1;
    return OrderElement(e.params(), solve_exact(regular_representation(e), rhs));
}

OrderElement invert(const IntElement& e) { return invert(e.cast<Rational>()); }

bool is_unit(const OrderElement& e) { return is_unit(to_integral(e)); }

bool is_unit(const IntElement& e) {
    const Integer n = norm(e);
    return n == 1 || n == -1;
}

Vec<Integer> minimal_polynomial(const IntElement& e) {
    if (e.is_rational()) {
        Vec<Integer> out(2);
        out << -e[0], 1;
        return out;
    }
    const Vec<Rational> cp = characteristic_polynomial<Integer>(regular_representation(e));
    Vec<Integer> out(cp.size());
    for (Eigen::Index i = 0; i < cp.size(); ++i) out(i) = numerator(cp(i));
    return out;
}

PowerByNormUnit power_by_norm_unit(unsigned d, unsigned t, const Integer& a, const Integer& b) {
    if (t < 1 || d <= t) throw PreconditionError("power_by_norm_unit: need d > t >= 1");
    if (b == 0 || a % b != 0) throw PreconditionError("power_by_norm_unit: b must divide a");
    PowerByNormUnit out;
    out.d = d;
    out.t = t;
    out.a = a;
    out.b = b;
    out.v = a / b;
    const Integer s = (d % 2 == 1) ? 1 : -1;  // (-1)^(d-1)
    out.coords = Vec<Integer>::Zero(d);
    out.coords(0) = s;
    out.coords(t) -= s * out.v;
    Vec<Integer> p = Vec<Integer>::Zero(d + 1);
    p(d) = 1;
    p(t) += a;
    p(0) -= b;
    out.norm = resultant<Integer>(p, out.coords);
    return out;
}

PowerByNormUnit power_by_norm_unit(const TrinomialParams& params) {
    return power_by_norm_unit(params.degree(), params.t(), params.a(), params.b());
}

bool is_ambiguous_principal_generator(const IntElement& e) {
    const Integer n = norm(e);
    if (n == 0) throw DomainError("is_ambiguous_principal_generator: N(e) = 0");
    const IntElement pw = power(e, e.degree());
    Vec<Integer> q(pw.coords().size());
    for (Eigen::Index i = 0; i < q.size(); ++i) {
        if (pw[i] % n != 0) return false;
        q(i) = pw[i] / n;
    }
    return is_unit(IntElement(e.params(), q));
}

bool principal_ideal_absorption_check(const TrinomialParams& params) {
    const IntElement th = IntElement::theta(params);
    OrderElement scaled = invert(th);
    scaled *= Rational(params.b());
    for (Eigen::Index i = 0; i < scaled.coords().size(); ++i)
        if (!is_integral(scaled[i])) return false;
    if (!params.is_cubic()) return true;
    return to_integral(scaled) == complement(th);
}

template class Element<Integer>;
template class Element<Rational>;
template Element<Integer> multiply(const Element<Integer>&, const Element<Integer>&);
template Element<Rational> multiply(const Element<Rational>&, const Element<Rational>&);
template Element<Integer> power(const Element<Integer>&, unsigned);
template Element<Rational> power(const Element<Rational>&, unsigned);
template Mat<Integer> regular_representation(const Element<Integer>&);
template Mat<Rational> regular_representation(const Element<Rational>&);
template Integer norm(const Element<Integer>&);
template Rational norm(const Element<Rational>&);
template Integer norm_resultant(const Element<Integer>&);
template Rational norm_resultant(const Element<Rational>&);
template Element<Integer> complement(const Element<Integer>&);
template Element<Rational> complement(const Element<Rational>&);
template Integer trace(const Element<Integer>&);
template Rational trace(const Element<Rational>&);

}  // namespace trinom
