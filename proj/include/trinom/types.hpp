#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace trinom {

namespace mp = boost::multiprecision;

// Expression templates are off: values go into Eigen containers and lambdas.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Enumeration boxes or class-group sizes beyond the configured guard.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An embedding comparison could not be decided at the available precision.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& n) { return n.str(); }

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Integer ipow(Integer base, unsigned e) {
    Integer out = 1;
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

inline Rational rpow(const Rational& base, unsigned e) {
    Rational out = 1, b = base;
    while (e) {
        if (e & 1u) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline int sign(const Integer& n) { return n.sign(); }
inline int sign(const Rational& q) { return q.sign(); }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

inline Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

}  // namespace trinom
