#pragma once

#include "trinom/types.hpp"

#include <optional>
#include <string>

namespace trinom {

// Prime-power degree data for the generalised family X^d + a X^t - b,
// d = p^n, t = p^s, n > s.
struct DegreeData {
    unsigned p = 3;
    unsigned n = 1;
    unsigned s = 0;
};

// (sigma, r, b) with sigma in {-1, +1}. Construction checks that the
// trinomial is irreducible over Q.
class TrinomialParams {
public:
    TrinomialParams(int sigma, Integer r, Integer b, std::optional<DegreeData> degree_data = std::nullopt);

    int sigma() const { return sigma_; }
    const Integer& r() const { return r_; }
    const Integer& b() const { return b_; }
    const std::optional<DegreeData>& degree_data() const { return degree_data_; }

    unsigned degree() const { return d_; }
    unsigned t() const { return t_; }
    bool is_cubic() const { return d_ == 3 && t_ == 1; }

    // v = sigma*p*r, a = v*b (cubic: a = sigma*3rb)
    const Integer& v() const { return v_; }
    const Integer& a() const { return a_; }

    // Defining polynomial, ascending coefficients, length d+1.
    Vec<Integer> polynomial() const;

    std::string describe() const;

    friend bool operator==(const TrinomialParams& x, const TrinomialParams& y) {
        return x.sigma_ == y.sigma_ && x.r_ == y.r_ && x.b_ == y.b_ && x.d_ == y.d_ && x.t_ == y.t_;
    }

private:
    int sigma_;
    Integer r_, b_, v_, a_;
    std::optional<DegreeData> degree_data_;
    unsigned d_ = 3, t_ = 1;
};

// Shorthand for the cubic family member.
inline TrinomialParams cubic(int sigma, long r, long b) { return TrinomialParams(sigma, Integer(r), Integer(b)); }

}  // namespace trinom
