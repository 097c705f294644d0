#include "trinom/multiplicity.hpp"

namespace trinom {

namespace {

Integer as_integer(const Rational& q, const char* who) {
    if (!is_integral(q)) throw DomainError(std::string(who) + ": non-integral value " + to_string(q) + ", invalid partition");
    return numerator(q);
}

Rational pow2(int e) { return e >= 0 ? Rational(ipow(Integer(2), e)) : Rational(1, ipow(Integer(2), -e)); }

}  // namespace

Rational restrictive_contribution(unsigned v) {
    if (v == 0) return Rational(1, 2);
    const Integer sign = (v - 1) % 2 ? -1 : 1;
    return Rational(ipow(Integer(2), v - 1) - sign, 3);
}

Integer multiplicity_free(unsigned rho, unsigned omega, unsigned u, unsigned v) {
    const Rational m = Rational(ipow(Integer(3), rho + omega) * ipow(Integer(2), u)) * restrictive_contribution(v);
    return as_integer(m, "multiplicity_free");
}

Integer multiplicity_free(const MultiplicityInput& in) {
    if (in.u + in.v != in.tau) throw DomainError("multiplicity_free: u + v must equal tau");
    return multiplicity_free(in.rho, in.omega, in.u, in.v);
}

Integer multiplicity_accumulative(unsigned rho, unsigned tau, unsigned omega, unsigned delta) {
    if (rho + tau + omega < delta) throw DomainError("multiplicity_accumulative: negative exponent");
    return (ipow(Integer(3), rho + tau + omega - delta) - 1) / 2;
}

Integer multiplicity_degenerate(unsigned rho, unsigned tau) {
    if (tau < 1) throw DomainError("multiplicity_degenerate: tau >= 1 required");
    return ipow(Integer(3), rho) * ipow(Integer(2), tau - 1);
}

Integer multiplicity_degenerate_effective(unsigned rho, unsigned u_eff, unsigned v_eff) {
    if (v_eff < 1) throw DomainError("multiplicity_degenerate_effective: v_eff >= 1 required");
    const Rational m = Rational(ipow(Integer(3), rho) * ipow(Integer(2), u_eff)) * restrictive_contribution(v_eff);
    return as_integer(m, "multiplicity_degenerate_effective");
}

Integer multiplicity_defect2(unsigned rho, unsigned omega, unsigned u, unsigned v, const std::array<unsigned, 4>& n) {
    Rational s = pow2(static_cast<int>(v) - 1);
    for (unsigned ni : n) {
        const Rational term = pow2(static_cast<int>(ni));
        s += ((static_cast<int>(v) - static_cast<int>(ni)) % 2 != 0) ? -term : term;
    }
    const Rational m = Rational(ipow(Integer(3), rho + omega) * ipow(Integer(2), u)) * s / 9;
    return as_integer(m, "multiplicity_defect2");
}

std::vector<std::pair<unsigned, unsigned>> consistent_partitions(const Integer& m, unsigned rho, unsigned omega,
                                                                 unsigned tau) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned u = 0; u <= tau; ++u) {
        const unsigned v = tau - u;
        const Rational val = Rational(ipow(Integer(3), rho + omega) * ipow(Integer(2), u)) * restrictive_contribution(v);
        if (val == Rational(m)) out.emplace_back(u, v);
    }
    return out;
}

std::optional<unsigned> infer_delta(const Integer& m_prime, unsigned rho, unsigned tau, unsigned omega) {
    if (m_prime < 0) return std::nullopt;
    Integer n = 2 * m_prime + 1;
    unsigned k = 0;
    while (n % 3 == 0) {
        n /= 3;
        ++k;
    }
    if (n != 1 || k > rho + tau + omega) return std::nullopt;
    return rho + tau + omega - k;
}

}  // namespace trinom
