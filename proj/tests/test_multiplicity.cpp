#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trinom/multiplicity.hpp"

#include <algorithm>

using namespace trinom;

namespace {

// Number of v-tuples of nonzero residues mod 3 summing to 0, halved for the
// sign symmetry; independent of the closed form.
Rational contribution_by_count(unsigned v) {
    if (v == 0) return Rational(1, 2);
    unsigned long long count = 0;
    const unsigned long long total = 1ULL << v;
    for (unsigned long long mask = 0; mask < total; ++mask) {
        unsigned s = 0;
        for (unsigned i = 0; i < v; ++i) s += (mask >> i & 1) ? 2 : 1;
        if (s % 3 == 0) ++count;
    }
    return Rational(Integer(count), 2);
}

}  // namespace

TEST_CASE("restrictive contribution") {
    CHECK(restrictive_contribution(0) == Rational(1, 2));
    CHECK(restrictive_contribution(1) == 0);
    CHECK(restrictive_contribution(2) == 1);
    CHECK(restrictive_contribution(3) == 1);
    CHECK(restrictive_contribution(4) == 3);
    CHECK(restrictive_contribution(5) == 5);
    for (unsigned v = 1; v <= 16; ++v) {
        CAPTURE(v);
        CHECK(restrictive_contribution(v) == contribution_by_count(v));
    }
}

TEST_CASE("free multiplicity") {
    CHECK(multiplicity_free(0, 1, 5, 0) == 48);
    CHECK(multiplicity_free(1, 0, 1, 4) == 18);
    CHECK(multiplicity_free(0, 0, 0, 2) == 1);
    CHECK(multiplicity_free(0, 1, 3, 2) == 24);
    CHECK(multiplicity_free(0, 1, 2, 3) == 12);
    CHECK(multiplicity_free(0, 1, 1, 4) == 18);
    CHECK(multiplicity_free(0, 1, 0, 5) == 15);
    CHECK(multiplicity_free(0, 0, 2, 1) == 0);

    MultiplicityInput in;
    in.rho = 1;
    in.tau = 5;
    in.u = 1;
    in.v = 4;
    CHECK(multiplicity_free(in) == 18);
    in.v = 3;
    CHECK_THROWS_AS(multiplicity_free(in), DomainError);
    // 2^0 * 3^0 * 1/2
    CHECK_THROWS_AS(multiplicity_free(0, 0, 0, 0), DomainError);
}

TEST_CASE("free multiplicity is integral once a free or restrictive pair exists") {
    for (unsigned v = 2; v <= 12; ++v) CHECK(is_integral(restrictive_contribution(v)));
    for (unsigned rho = 0; rho <= 2; ++rho)
        for (unsigned omega = 0; omega <= 1; ++omega)
            for (unsigned u = 1; u <= 6; ++u) CHECK(multiplicity_free(rho, omega, u, 0) > 0);
}

TEST_CASE("restrictive contribution is non-decreasing, strictly from v = 3") {
    for (unsigned v = 1; v <= 20; ++v) CHECK(restrictive_contribution(v + 1) >= restrictive_contribution(v));
    for (unsigned v = 3; v <= 20; ++v) CHECK(restrictive_contribution(v + 1) > restrictive_contribution(v));
}

TEST_CASE("accumulative multiplicity") {
    CHECK(multiplicity_accumulative(0, 5, 1, 0) == 364);
    CHECK(multiplicity_accumulative(1, 4, 0, 1) == 40);
    CHECK(multiplicity_accumulative(0, 1, 0, 0) == 1);
    CHECK(multiplicity_accumulative(0, 1, 0, 1) == 0);
    CHECK_THROWS_AS(multiplicity_accumulative(0, 1, 0, 2), DomainError);
    for (unsigned k = 1; k <= 10; ++k) CHECK(multiplicity_accumulative(0, k, 0, 0) > multiplicity_accumulative(0, k, 0, 1));
}

TEST_CASE("degenerate multiplicities") {
    CHECK(multiplicity_degenerate(0, 2) == 2);
    CHECK(multiplicity_degenerate(0, 5) == 16);
    CHECK(multiplicity_degenerate(1, 3) == 12);
    CHECK_THROWS_AS(multiplicity_degenerate(0, 0), DomainError);
    CHECK(multiplicity_degenerate_effective(1, 2, 3) == 12);
    CHECK(multiplicity_degenerate_effective(1, 3, 2) == 24);
    CHECK(multiplicity_degenerate_effective(0, 2, 2) == 4);
    CHECK_THROWS_AS(multiplicity_degenerate_effective(1, 2, 0), DomainError);
}

TEST_CASE("defect-2 multiplicity") {
    CHECK(multiplicity_defect2(1, 0, 1, 3, {1, 1, 1, 0}) == 6);
    CHECK(multiplicity_defect2(1, 1, 1, 4, {2, 1, 1, 0}) == 18);
    // (2 + 4) / 9
    CHECK_THROWS_AS(multiplicity_defect2(0, 0, 0, 2, {0, 0, 0, 0}), DomainError);
    CHECK(multiplicity_defect2(0, 0, 0, 1, {0, 0, 0, 1}) == 0);
}

TEST_CASE("consistent partitions") {
    using P = std::vector<std::pair<unsigned, unsigned>>;
    CHECK(consistent_partitions(Integer(18), 1, 0, 5) == P{{1, 4}});
    CHECK(consistent_partitions(Integer(12), 1, 0, 5) == P{{2, 3}});
    CHECK(consistent_partitions(Integer(8), 0, 0, 4) == P{{4, 0}});
    CHECK(consistent_partitions(Integer(7), 0, 0, 4).empty());
    // u + v = tau exhausts every candidate, so each partition round-trips
    for (unsigned tau = 1; tau <= 7; ++tau)
        for (unsigned u = 0; u <= tau; ++u) {
            const Rational val = Rational(ipow(Integer(2), u)) * restrictive_contribution(tau - u);
            if (!is_integral(val)) continue;
            const auto parts = consistent_partitions(numerator(val), 0, 0, tau);
            CHECK(std::find(parts.begin(), parts.end(), std::make_pair(u, tau - u)) != parts.end());
        }
}

TEST_CASE("delta inference") {
    CHECK(infer_delta(Integer(364), 0, 5, 1) == 0u);
    CHECK(infer_delta(Integer(40), 1, 4, 0) == 1u);
    CHECK(infer_delta(Integer(0), 0, 1, 0) == 1u);
    CHECK_FALSE(infer_delta(Integer(41), 1, 4, 0).has_value());
    CHECK_FALSE(infer_delta(Integer(1093), 0, 5, 1).has_value());
    for (unsigned rho = 0; rho <= 2; ++rho)
        for (unsigned tau = 1; tau <= 6; ++tau)
            for (unsigned delta = 0; delta <= rho + tau; ++delta)
                CHECK(infer_delta(multiplicity_accumulative(rho, tau, 0, delta), rho, tau, 0) == delta);
}
