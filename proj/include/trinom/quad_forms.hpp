#pragma once

#include "trinom/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace trinom {

// a x^2 + b xy + c y^2, positive definite. Coefficients stay within int64
// for |d| up to about 1e15; products are formed in 128 bits.
struct QuadForm {
    std::int64_t a = 1, b = 1, c = 1;

    std::int64_t discriminant() const;
    // |b| <= a <= c, and b >= 0 when |b| = a or a = c.
    bool is_reduced() const;
    std::string str() const;

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

bool is_fundamental_discriminant(const Integer& d);

QuadForm reduce_form(QuadForm f);
QuadForm principal_form(std::int64_t d);
QuadForm inverse(const QuadForm& f);
// DomainError on discriminant mismatch.
QuadForm compose(const QuadForm& f, const QuadForm& g);
QuadForm form_power(QuadForm f, std::uint64_t n);

// One reduced form per class, sorted. DomainError unless d < 0 is
// fundamental.
std::vector<QuadForm> reduced_forms(std::int64_t d);

struct ClassGroupStructure {
    Integer discriminant;
    std::uint64_t h = 1;
    std::vector<std::uint64_t> elementary_divisors;  // d1 | d2 | ..., all > 1
    unsigned three_rank = 0;

    std::string str() const;  // "C6", "C2 x C6", "1"
};

constexpr std::int64_t kClassGroupGuard = 100000000;

// Elementary divisors from the p-power torsion counts #{x : x^(p^k) = 1}
// for each p | h. CapacityError when |d| > guard.
ClassGroupStructure class_group(const Integer& d, std::int64_t guard = kClassGroupGuard);

}  // namespace trinom
