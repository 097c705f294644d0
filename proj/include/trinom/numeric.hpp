#pragma once

#include "trinom/params.hpp"
#include "trinom/types.hpp"

#include <vector>

namespace trinom {

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    Integer value;
    std::vector<PrimePower> factors;  // ascending primes
    // Composite cofactors left over when a work budget ran out. Empty for
    // factorize(); only factorize_within() can fill it.
    std::vector<Integer> unfactored;

    bool complete() const { return unfactored.empty(); }
    Integer product() const;
    unsigned exponent_of(const Integer& p) const;
    std::size_t distinct_primes() const { return factors.size(); }
    std::string str() const;
};

bool is_prime(const Integer& n);

// Complete factorisation of |n|. Throws DomainError for n = 0.
Factorization factorize(const Integer& n);

// Like factorize, but gives up on cofactors that survive `rho_iterations`
// Pollard rho steps and reports them in `unfactored`.
Factorization factorize_within(const Integer& n, unsigned long rho_iterations);

unsigned valuation(const Integer& n, const Integer& p);

bool is_squarefree(const Integer& n);

// No prime power p^k divides n.
bool is_power_free(const Integer& n, unsigned k);

// Closed rational interval. Endpoints bracket a sign change of the
// polynomial it was isolated from.
struct RootInterval {
    Rational lo, hi;

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Evaluate an integer polynomial (ascending coefficients) exactly.
Rational evaluate(const Vec<Integer>& poly, const Rational& x);

// Root of the trinomial used for embeddings: the unique real root in (0,1)
// for sigma=+1, the root in (-1,0) for sigma=-1. Throws DomainError if
// the polynomial is reducible (cannot happen for a constructed params).
RootInterval real_root(const TrinomialParams& params, const Rational& target_error);

// Shrink an isolating interval of `poly` in place until its width is at
// most target_error. The new interval is contained in the old one.
void refine_root(const Vec<Integer>& poly, RootInterval& iv, const Rational& target_error);

Rational decimal_error(unsigned digits);  // 10^-digits

}  // namespace trinom
