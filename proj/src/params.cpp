#include "trinom/params.hpp"

#include "trinom/numeric.hpp"
#include "trinom/polynomial.hpp"

#include <sstream>

namespace trinom {

TrinomialParams::TrinomialParams(int sigma, Integer r, Integer b, std::optional<DegreeData> degree_data)
    : sigma_(sigma), r_(std::move(r)), b_(std::move(b)), degree_data_(degree_data) {
    if (sigma_ != 1 && sigma_ != -1) throw DomainError("sigma must be +1 or -1");
    if (r_ < 1) throw DomainError("r must be a positive integer");
    if (b_ < 1) throw DomainError("b must be a positive integer");
    unsigned p = 3;
    if (degree_data_) {
        const auto& dd = *degree_data_;
        if (dd.p < 3 || !is_prime(Integer(dd.p))) throw DomainError("degree data: p must be an odd prime");
        if (dd.n == 0 || dd.n <= dd.s) throw DomainError("degree data: need n > s >= 0");
        p = dd.p;
        d_ = static_cast<unsigned>(ipow(Integer(p), dd.n));
        t_ = static_cast<unsigned>(ipow(Integer(p), dd.s));
    }
    v_ = Integer(sigma_) * p * r_;
    a_ = v_ * b_;
    if (!is_irreducible_over_q(polynomial()))
        throw DomainError("trinomial " + describe() + " is reducible over Q");
}

Vec<Integer> TrinomialParams::polynomial() const {
    Vec<Integer> c = Vec<Integer>::Zero(d_ + 1);
    c(d_) = 1;
    c(t_) += a_;
    c(0) -= b_;
    return c;
}

std::string TrinomialParams::describe() const {
    std::ostringstream os;
    os << "X^" << d_ << (a_ < 0 ? " - " : " + ") << abs(a_);
    if (t_ == 1)
        os << "X";
    else
        os << "X^" << t_;
    os << " - " << b_;
    return os.str();
}

}  // namespace trinom
