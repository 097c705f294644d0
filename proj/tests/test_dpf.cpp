#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trinom/dpf.hpp"
#include "trinom/invariants.hpp"
#include "trinom/order.hpp"

using namespace trinom;

TEST_CASE("dpf report examples") {
    const auto r7 = dpf_report(cubic(+1, 1, 7));
    CHECK(r7.theta_is_dpf);
    CHECK_FALSE(r7.trivial);
    CHECK(r7.theta_norm == 7);
    CHECK(r7.theta_sq_norm == 49);
    CHECK(r7.dpf_norms_divide_f_squared);
    CHECK(r7.forced_types == std::set<std::string>{"beta"});

    const auto r1 = dpf_report(cubic(+1, 1, 1));
    CHECK(r1.theta_is_dpf);
    CHECK(r1.trivial);
    CHECK(r1.theta_norm == 1);
    CHECK(is_unit(IntElement::theta(cubic(+1, 1, 1))));
    CHECK(r1.forced_types.empty());

    const auto r6 = dpf_report(cubic(-1, 1, 6));
    CHECK(r6.theta_is_dpf);
    CHECK(r6.forced_types == std::set<std::string>{"beta_1", "beta_2", "gamma", "eps"});

    CHECK_THROWS_AS(dpf_report(cubic(+1, 5, 14)), PreconditionError);
    CHECK_THROWS_AS(dpf_report(cubic(+1, 1, 4)), PreconditionError);
}

TEST_CASE("primitivity") {
    CHECK(primitivity_check(cubic(+1, 1, 7)));
    CHECK_FALSE(primitivity_check(cubic(+1, 1, 8)));
    CHECK(primitivity_check(cubic(+1, 1, 2310)));
    CHECK(primitivity_check(cubic(+1, 1, 4)));
    CHECK_FALSE(primitivity_check(cubic(+1, 1, 24)));
    CHECK(primitivity_check(cubic(+1, 1, 36)));
}

TEST_CASE("every monogenic member with b >= 2 has theta as an absolute DPF") {
    int count = 0;
    for (int sigma : {+1, -1})
        for (long b = 2; b <= 150; ++b)
            for (long r = 1; r <= 8; ++r) {
                const TrinomialParams p = cubic(sigma, r, b);
                if (!monogeneity_test(p).monogenic) continue;
                const auto rep = dpf_report(p);
                CAPTURE(p.describe());
                CHECK(rep.theta_is_dpf);
                CHECK(rep.theta_norm == b);
                CHECK(rep.theta_sq_norm == b * b);
                CHECK(rep.theta_norm * rep.theta_sq_norm == Integer(b) * b * b);
                CHECK(rep.dpf_norms_divide_f_squared);
                CHECK(!rep.forced_types.empty());
                CHECK(primitivity_check(p));
                // theta^3 / N(theta) = 1 - sigma 3r theta
                const IntElement theta = IntElement::theta(p);
                const IntElement cube = power(theta, 3);
                const IntElement expected(p, {Integer(b), Integer(-sigma * 3 * r * b), Integer(0)});
                CHECK(cube == expected);
                const IntElement unit(p, {Integer(1), Integer(-sigma * 3 * r), Integer(0)});
                CHECK(cube == unit * Integer(b));
                CHECK(is_unit(unit));
                ++count;
            }
    CHECK(count > 500);
}
