#include "trinom/embedding.hpp"

#include <cmath>
#include <limits>

namespace trinom {

long double to_long_double(const Integer& n) {
    if (mpz_fits_slong_p(n.backend().data())) return static_cast<long double>(mpz_get_si(n.backend().data()));
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, n.backend().data());
    // Top 53 bits only; enough for the magnitudes that get here.
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

long double to_long_double(const Rational& q) {
    return to_long_double(numerator(q)) / to_long_double(denominator(q));
}

namespace {

struct Interval {
    Rational lo, hi;
};

Interval mul(const Interval& x, const Interval& y) {
    Rational p[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
    Interval r{p[0], p[0]};
    for (const auto& v : p) {
        if (v < r.lo) r.lo = v;
        if (v > r.hi) r.hi = v;
    }
    return r;
}

}  // namespace

Embedding::Embedding(const TrinomialParams& params)
    : params_(params), poly_(params.polynomial()), iv_(real_root(params, decimal_error(30))) {
    long double x = to_long_double(iv_.mid());
    for (int i = 0; i < 4; ++i) {
        long double p = 0, dp = 0;
        for (Eigen::Index k = poly_.size() - 1; k >= 0; --k) {
            dp = dp * x + p;
            p = p * x + to_long_double(poly_(k));
        }
        if (dp == 0) break;
        x -= p / dp;
    }
    theta_ = x;
    if (params_.is_cubic() && params_.sigma() == 1) {
        s_ = std::sqrt(to_long_double(params_.a()) + 3 * theta_ * theta_ / 4);
    }
}

long double Embedding::real(const OrderElement& e) const {
    long double acc = 0;
    for (Eigen::Index k = e.coords().size() - 1; k >= 0; --k) acc = acc * theta_ + to_long_double(e[k]);
    return acc;
}

long double Embedding::real(const IntElement& e) const {
    long double acc = 0;
    for (Eigen::Index k = e.coords().size() - 1; k >= 0; --k) acc = acc * theta_ + to_long_double(e[k]);
    return acc;
}

std::complex<long double> Embedding::conjugate(const OrderElement& e) const {
    if (!params_.is_cubic() || params_.sigma() != 1) throw DomainError("conjugate: cubic, sigma=+1 only");
    const std::complex<long double> t(-theta_ / 2, s_);
    return to_long_double(e[0]) + t * (to_long_double(e[1]) + t * to_long_double(e[2]));
}

long double Embedding::magnitude(const OrderElement& e) const {
    long double acc = 0, p = 1;
    for (Eigen::Index k = 0; k < e.coords().size(); ++k) {
        acc += std::fabs(to_long_double(e[k])) * p;
        p *= std::fabs(theta_);
    }
    return acc;
}

int Embedding::exact_sign(const OrderElement& e) {
    if (e.is_zero()) return 0;
    Rational target = iv_.width();
    for (int iter = 0; iter < 4000; ++iter) {
        const Interval th{iv_.lo, iv_.hi};
        Interval acc{e[e.coords().size() - 1], e[e.coords().size() - 1]};
        for (Eigen::Index k = e.coords().size() - 2; k >= 0; --k) {
            acc = mul(acc, th);
            acc.lo += e[k];
            acc.hi += e[k];
        }
        if (acc.lo > 0) return 1;
        if (acc.hi < 0) return -1;
        target /= Rational(Integer(1) << 32);
        refine_root(poly_, iv_, target);
        ++refinements_;
    }
    throw PrecisionError("Embedding::sign: root refinement did not separate " + e.str() + " from 0");
}

int Embedding::sign(const OrderElement& e) {
    const long double v = real(e);
    const long double margin = 1e-12L * magnitude(e) + std::numeric_limits<long double>::min();
    if (v > margin) return 1;
    if (v < -margin) return -1;
    return exact_sign(e);
}

int Embedding::compare(const OrderElement& x, const OrderElement& y) { return sign(x - y); }

int Embedding::compare(const OrderElement& x, const Rational& q) {
    return sign(x - OrderElement::rational(params_, q));
}

}  // namespace trinom
