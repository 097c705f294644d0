#pragma once

#include "trinom/types.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace trinom {

struct MultiplicityInput {
    unsigned rho = 0;    // 3-class rank of K
    unsigned omega = 0;  // v3(b)
    unsigned tau = 1;    // distinct primes of f
    unsigned u = 0;      // free primes
    unsigned v = 0;      // restrictive primes
    unsigned delta = 0;
    std::optional<std::array<unsigned, 4>> n_parts;
};

// c(0) = 1/2, c(v) = (2^(v-1) - (-1)^(v-1)) / 3: 1/2, 0, 1, 1, 3, 5, 11, ...
Rational restrictive_contribution(unsigned v);

// 3^(rho+omega) 2^u c(v). DomainError unless u + v = tau and the value is
// an integer.
Integer multiplicity_free(const MultiplicityInput& in);
Integer multiplicity_free(unsigned rho, unsigned omega, unsigned u, unsigned v);

// (3^(rho+tau+omega-delta) - 1) / 2
Integer multiplicity_accumulative(unsigned rho, unsigned tau, unsigned omega, unsigned delta);

// 3^rho 2^(tau-1)
Integer multiplicity_degenerate(unsigned rho, unsigned tau);

// 3^rho 2^u_eff c(v_eff), with the effective pair supplied by the caller.
Integer multiplicity_degenerate_effective(unsigned rho, unsigned u_eff, unsigned v_eff);

// 3^(rho+omega) 2^u (2^(v-1) + sum_i (-1)^(v-n_i) 2^(n_i)) / 9
Integer multiplicity_defect2(unsigned rho, unsigned omega, unsigned u, unsigned v, const std::array<unsigned, 4>& n);

// Every (u, v) with u + v = tau and multiplicity_free = m, ascending in u.
std::vector<std::pair<unsigned, unsigned>> consistent_partitions(const Integer& m, unsigned rho, unsigned omega,
                                                                 unsigned tau);

// delta with multiplicity_accumulative(rho, tau, omega, delta) = m_prime.
std::optional<unsigned> infer_delta(const Integer& m_prime, unsigned rho, unsigned tau, unsigned omega);

}  // namespace trinom
