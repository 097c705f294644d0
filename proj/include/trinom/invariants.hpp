#pragma once

#include "trinom/numeric.hpp"
#include "trinom/params.hpp"

#include <string>
#include <vector>

namespace trinom {

enum class ConductorCase {
    Irregular3DividesB,  // 3 || b: f = 3b, dK = -3 dual
    FEquals9B,           // 3 !| b, 3 | (sigma r b + 1): f = 9b, dK = -dual/3
    FEquals3B,           // otherwise: f = 3b, dK = -3 dual
};

std::string to_string(ConductorCase c);

struct MonogeneityReport {
    bool monogenic = false;
    bool conditional = false;  // the dual discriminant was not fully factored
    Integer T;                 // critical term b^2 + sigma 3rb - 1
    std::vector<std::string> failed;
    std::vector<Integer> unfactored;

    std::string diagnostics() const;
};

// Cubic family only: b squarefree; v3(T) = 1 when 3 does not divide b;
// every prime l with l^2 | dual divides 3rb.
MonogeneityReport monogeneity_test(const TrinomialParams& params);

struct RawDiscriminants {
    Integer dual;  // sigma 4 r^3 b + 1
    Integer dP;    // -27 b^2 dual
};

RawDiscriminants raw_discriminants(const TrinomialParams& params);

struct FieldInvariants {
    bool monogenic = false;
    Integer T, dP, dual_disc, dL;
    ConductorCase conductor_case = ConductorCase::FEquals3B;
    unsigned e = 1;         // f = 3^e b
    unsigned v3_f = 1;      // 3-exponent of f
    Integer f, f0, dK;
    int dK_mod9 = 0;        // sign(dK) * (|dK| mod 9)
    unsigned omega = 0;     // v3(b)
    unsigned tau = 0;       // distinct primes of f
    Factorization f_factorization;
    std::vector<Integer> partial_factor_failures;
};

// DomainError for non-monogenic parameters (use raw_discriminants then).
FieldInvariants compute_invariants(const TrinomialParams& params);

int signed_mod9(const Integer& n);

// (-1)^(p(p-1)/2) p^p b^(p-1) (sigma (p-1)^(p-1) r^p b + 1)
Integer degree_p_discriminant(unsigned p, int sigma, const Integer& r, const Integer& b);

// A real number known to lie in [lo, hi].
struct CertifiedReal {
    Rational lo, hi;

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    double approx() const { return mid().convert_to<double>(); }
    // Midpoint rounded half away from zero.
    std::string fixed(unsigned decimals) const;
    // Every point of the interval is within tol of target.
    bool within(const Rational& target, const Rational& tol) const { return lo >= target - tol && hi <= target + tol; }
};

// Reg = log(1/eps_0) = log b - 3 log theta for b > 1, -log theta for b = 1,
// with hi - lo <= precision. sigma = -1 is unsupported (DomainError).
CertifiedReal regulator_simply_real(const TrinomialParams& params, const Rational& precision = decimal_error(9));

// log of a positive rational with outward rounding.
CertifiedReal certified_log(const Rational& x);
CertifiedReal certified_cbrt(const Rational& x);

std::string fixed_decimal(const Rational& q, unsigned decimals);

}  // namespace trinom
