#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trinom/voronoi.hpp"

#include <Eigen/LU>

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

using namespace trinom;

namespace {

// Printed-style matrix: (1/den) * rows.
Mat<Rational> mat(long den, std::initializer_list<std::initializer_list<long long>> rows) {
    Mat<Rational> m(3, 3);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long long v : row) m(i, j++) = Rational(v, den);
        ++i;
    }
    return m;
}

OrderElement col(const TrinomialParams& P, const Mat<Rational>& m, int j) {
    return OrderElement(P, Vec<Rational>(m.col(j)));
}

// Same lattice as (1, g, h) with the printed g and h.
void check_reduced(const TrinomialParams& P, const LatticeBasis& mine, const Mat<Rational>& printed) {
    CHECK(mine.column(P, 1) == col(P, printed, 1));
    CHECK(lattice_key(mine.columns) == lattice_key(printed));
}

struct Rb {
    long r, b;
};

const std::vector<Rb> kRegular = {{3, 7}, {4, 7}, {1, 2}, {24, 70}, {30, 70}, {6, 14}, {2, 5}, {10, 3}};
const std::vector<Rb> kTwisted = {{1, 7}, {2, 7}, {23, 70}, {4, 14}, {1, 2310}, {7, 2310}, {1, 5}};

IntElement I(const TrinomialParams& P, long x, long y, long z) {
    return IntElement(P, {Integer(x), Integer(y), Integer(z)});
}

// Direct search for a dominator of e. The coordinate box comes from the
// inverse Vandermonde matrix of the three embeddings.
bool naive_minimum(const IntElement& e) {
    const TrinomialParams& P = e.params();
    Embedding emb(P);
    using C = std::complex<long double>;
    const long double t = emb.theta();
    const C tc = emb.conjugate(OrderElement::theta(P));
    Eigen::Matrix<C, 3, 3> V;
    const C ts[3] = {C(t, 0), tc, std::conj(tc)};
    for (int i = 0; i < 3; ++i) V.row(i) << C(1, 0), ts[i], ts[i] * ts[i];
    const Eigen::Matrix<C, 3, 3> Vi = V.inverse();
    const OrderElement E = e.cast<Rational>();
    const long double ev = std::fabs(emb.real(E)), ec = std::sqrt(emb.conjugate_norm(E));
    long box[3];
    for (int i = 0; i < 3; ++i)
        box[i] = static_cast<long>(std::abs(Vi(i, 0)) * ev + (std::abs(Vi(i, 1)) + std::abs(Vi(i, 2))) * ec) + 1;
    for (long x = -box[0]; x <= box[0]; ++x)
        for (long y = -box[1]; y <= box[1]; ++y)
            for (long z = -box[2]; z <= box[2]; ++z) {
                if (!x && !y && !z) continue;
                OrderElement n = I(P, x, y, z).cast<Rational>();
                if (n == E || n == -E) continue;
                const long double nv = std::fabs(emb.real(n)), nc = std::sqrt(emb.conjugate_norm(n));
                if (nv <= ev * (1 + 1e-15L) && nc <= ec * (1 + 1e-15L)) return false;
            }
    return true;
}

bool naive_crucial(long r, long b, bool divisibility) {
    const double W = 1 + 2 * std::sqrt(3.0 * r * b + 1);
    for (long z = -6; z <= 6; ++z)
        for (long y = -60; y <= 60; ++y)
            for (long x = -2 * r * b * 7; x <= 2 * r * b * 7; ++x) {
                if (!x && !y && !z) continue;
                if (divisibility && (x % b || y % b)) continue;
                if (std::labs(x - 2 * r * b * z) >= b) continue;
                const long w = std::labs(3 * z - 6 * r * y);
                if (!(w < W - 1e-9 || (w < W + 1e-9 && (w - 1) * (w - 1) < 4 * (3 * r * b + 1)))) continue;
                if (std::labs(6 * r * r * b * z + y - 2 * r * x) < 1 + 2 * r * b) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("lattice keys and canonical bases") {
    auto P = cubic(1, 3, 7);
    const Mat<Rational> a = mat(7, {{7, 0, 7}, {0, 1, -1}, {0, 0, 1}});
    Mat<Rational> b = a;
    b.col(2) += 5 * a.col(1) - 3 * a.col(0);
    b.col(1) = -b.col(1);
    CHECK(lattice_key(a) == lattice_key(b));
    const LatticeBasis cb = canonical_basis(b);
    CHECK(lattice_key(cb.columns) == lattice_key(a));
    CHECK(cb.columns(0, 0) == 1);
    CHECK(cb.denominator == 7);
    Mat<Rational> c = a;
    c.col(1) *= 2;
    CHECK_FALSE(lattice_key(a) == lattice_key(c));
    Mat<Rational> half = Mat<Rational>::Identity(3, 3);
    half(0, 0) = Rational(1, 2);
    CHECK_THROWS_AS(canonical_basis(half), DomainError);
    CHECK_THROWS_AS(LatticeBasis::from_columns(mat(1, {{1, 0, 0}, {0, 1, 2}, {0, 0, 0}})), DomainError);
    (void)P;
}

TEST_CASE("division multiplies by complement over norm") {
    for (auto [r, b] : kRegular) {
        auto P = cubic(1, r, b);
        const OrderElement th = OrderElement::theta(P);
        const Mat<Rational> id = Mat<Rational>::Identity(3, 3);
        const Mat<Rational> d = divide_lattice(P, id, th);
        for (int j = 0; j < 3; ++j) CHECK(col(P, d, j) * th == col(P, id, j));
    }
}

TEST_CASE("golden traces, regular period") {
    for (auto [r, b] : kRegular) {
        CAPTURE(r);
        CAPTURE(b);
        auto P = cubic(1, r, b);
        const long a = 3 * r * b;
        Embedding emb(P);
        const auto red0 = reduce(emb, initial_basis());
        check_reduced(P, red0.basis, mat(1, {{1, 0, 1}, {0, 1, -1}, {0, 0, 1}}));

        auto s1 = voronoi_step(emb, initial_basis());
        CHECK(s1.relative_minimum == OrderElement::theta(P));
        CHECK(lattice_key(s1.divided) == lattice_key(mat(b, {{b, a - b, a}, {0, b, 0}, {0, 1, 1}})));
        check_reduced(P, s1.next, mat(b, {{b, 0, 0}, {0, b, 0}, {0, 0, 1}}));

        auto s2 = voronoi_step(emb, s1.next);
        CHECK(s2.relative_minimum == OrderElement::theta(P));
        CHECK(lattice_key(s2.divided) == lattice_key(mat(b, {{b, 0, a}, {0, 1, 0}, {0, 0, 1}})));
        check_reduced(P, s2.next, mat(b, {{b, 0, b}, {0, 1, -1}, {0, 0, 1}}));

        auto s3 = voronoi_step(emb, s2.next);
        CHECK(s3.relative_minimum == OrderElement(P, {Rational(0), Rational(1, b), Rational(0)}));
        CHECK(lattice_key(s3.divided) == lattice_key(mat(1, {{1, a - 1, a}, {0, 1, 0}, {0, 1, 1}})));
        check_reduced(P, s3.next, mat(1, {{1, 0, 1}, {0, 1, -1}, {0, 0, 1}}));
        CHECK(lattice_key(s3.next.columns) == lattice_key(initial_basis().columns));
    }
}

TEST_CASE("golden traces, twisted period") {
    for (auto [r, b] : kTwisted) {
        CAPTURE(r);
        CAPTURE(b);
        auto P = cubic(1, r, b);
        const long a = 3 * r * b;
        Embedding emb(P);
        auto s1 = voronoi_step(emb, initial_basis());
        CHECK(s1.relative_minimum == OrderElement::theta(P));
        CHECK(lattice_key(s1.divided) == lattice_key(mat(b, {{b, a - b, a}, {0, b, 0}, {0, 1, 1}})));
        check_reduced(P, s1.next, mat(b, {{b, 0, 0}, {0, 0, b}, {0, 1, 0}}));

        auto s2 = voronoi_step(emb, s1.next);
        CHECK(s2.relative_minimum == OrderElement(P, {Rational(0), Rational(0), Rational(1, b)}));
        CHECK(lattice_key(s2.divided) == lattice_key(mat(1, {{1, a, 9 * r * r * b}, {0, 0, 1}, {0, 1, 3 * r}})));
        check_reduced(P, s2.next, mat(1, {{1, 0, 1}, {0, 1, -1}, {0, 0, 1}}));
    }
}

TEST_CASE("reduced bases are bases with 0 < g < 1 and h > 0") {
    for (auto [r, b] : kRegular) {
        auto P = cubic(1, r, b);
        Embedding emb(P);
        LatticeBasis B = initial_basis();
        for (int i = 0; i < 4; ++i) {
            const auto red = reduce(emb, B);
            const OrderElement g = red.basis.column(P, 1), h = red.basis.column(P, 2);
            CHECK(emb.sign(g) > 0);
            CHECK(emb.compare(g, Rational(1)) < 0);
            CHECK(emb.sign(h) > 0);
            CHECK(lattice_key(red.basis.columns) == lattice_key(B.columns));
            B = voronoi_step(emb, B).next;
        }
    }
}

TEST_CASE("voronoi_chain examples") {
    auto c37 = voronoi_chain(cubic(1, 3, 7));
    CHECK(c37.period_length == 3);
    CHECK(c37.chain_class == ChainClass::M2);
    CHECK(c37.norms == std::vector<Integer>{1, 7, 49});
    CHECK(c37.fundamental_unit == I(c37.params, 1, -9, 0));
    CHECK(c37.minima[2] == I(c37.params, 0, 0, 1));

    auto c17 = voronoi_chain(cubic(1, 1, 7));
    CHECK(c17.period_length == 2);
    CHECK(c17.chain_class == ChainClass::M1);
    CHECK(c17.norms == std::vector<Integer>{1, 7});
    CHECK(c17.fundamental_unit == I(c17.params, 1, -3, 0));

    auto c21 = voronoi_chain(cubic(1, 2, 1));
    CHECK(c21.period_length == 1);
    CHECK(c21.chain_class == ChainClass::M0);
    CHECK(c21.fundamental_unit == IntElement::theta(c21.params));

    CHECK(to_string(ChainClass::M1) == "M1");
    CHECK_THROWS_AS(voronoi_chain(cubic(-1, 1, 6)), PreconditionError);
    CHECK_THROWS_AS(voronoi_chain(cubic(1, 5, 14)), PreconditionError);
    VoronoiOptions eq;
    eq.allow_non_maximal = true;
    auto c514 = voronoi_chain(cubic(1, 5, 14), eq);
    CHECK_FALSE(c514.maximal_order);
    CHECK(c514.period_length == 3);
    CHECK(c514.chain_class == ChainClass::M2);
}

TEST_CASE("chain invariants over a grid") {
    for (long b = 1; b <= 40; ++b) {
        for (long r = 1; r <= 16; ++r) {
            auto P = cubic(1, r, b);
            if (!monogeneity_test(P).monogenic) continue;
            CAPTURE(r);
            CAPTURE(b);
            const auto ch = voronoi_chain(P);
            const auto pred = predict_period(P);
            CHECK(ch.period_length == pred.period_length);
            CHECK(ch.chain_class == pred.chain_class);
            CHECK(ch.minima.front() == IntElement::one(P));
            CHECK(ch.minima.size() == ch.period_length);
            CHECK(abs(norm(ch.fundamental_unit)) == 1);
            OrderElement prod = OrderElement::one(P);
            for (const auto& g : ch.relative_minima) prod = prod * g;
            CHECK(prod == ch.fundamental_unit.cast<Rational>());
            const Integer k = 9 * ipow(Integer(r), 3) * b + 1;
            const Vec<Integer> mp = minimal_polynomial(ch.fundamental_unit);
            const bool direct = mp == (Vec<Integer>(4) << Integer(-1), 3 * k, Integer(-3), Integer(1)).finished();
            const bool inverse = mp == (Vec<Integer>(4) << Integer(-1), Integer(3), -3 * k, Integer(1)).finished();
            if (b > 1) CHECK((direct || inverse));
            for (const auto& m : ch.minima) CHECK(is_lattice_minimum(m));
        }
    }
}

TEST_CASE("is_lattice_minimum examples and naive oracle") {
    auto P7 = cubic(1, 1, 7);
    CHECK(is_lattice_minimum(IntElement::theta(P7)));
    CHECK(is_lattice_minimum(IntElement::one(P7)));
    auto P70 = cubic(1, 1, 70);
    CHECK_FALSE(is_lattice_minimum(power(IntElement::theta(P70), 2)));
    CHECK_FALSE(is_lattice_minimum(I(P7, 2, 0, 0)));
    CHECK_FALSE(is_lattice_minimum(IntElement::zero(P7)));
    for (auto [r, b] : std::vector<Rb>{{1, 2}, {2, 1}, {1, 3}, {3, 7}}) {
        auto P = cubic(1, r, b);
        for (long x = -3; x <= 3; ++x)
            for (long y = -3; y <= 3; ++y)
                for (long z = -2; z <= 2; ++z) {
                    if (!x && !y && !z) continue;
                    const auto e = I(P, x, y, z);
                    CAPTURE(e.str());
                    CHECK(is_lattice_minimum(e) == naive_minimum(e));
                }
    }
}

TEST_CASE("brute force minima examples") {
    auto P37 = cubic(1, 3, 7);
    auto m37 = brute_force_minima(P37, 100);
    REQUIRE(m37.size() >= 4);
    CHECK(m37[0] == IntElement::one(P37));
    CHECK(m37[1] == IntElement::theta(P37));
    CHECK(m37[2] == I(P37, 0, 0, 1));
    CHECK(m37[3] == I(P37, 1, -9, 0));

    auto P17 = cubic(1, 1, 7);
    auto m17 = brute_force_minima(P17, 100);
    REQUIRE(m17.size() >= 3);
    CHECK(m17[1] == IntElement::theta(P17));
    CHECK(m17[2] == I(P17, 1, -3, 0));

    auto P21 = cubic(1, 2, 1);
    auto m21 = brute_force_minima(P21, 10);
    REQUIRE(m21.size() >= 4);
    CHECK(m21[1] == IntElement::theta(P21));
    CHECK(m21[2] == I(P21, 0, 0, 1));
    CHECK(m21[3] == I(P21, 1, -6, 0));
}

TEST_CASE("chain minima are a prefix of the brute force minima") {
    for (long b : {1, 2, 7, 14}) {
        for (long r = 1; r <= 10; ++r) {
            auto P = cubic(1, r, b);
            if (!monogeneity_test(P).monogenic) continue;
            CAPTURE(r);
            CAPTURE(b);
            const auto ch = voronoi_chain(P);
            const auto bf = brute_force_minima(P, 40);
            REQUIRE(bf.size() > ch.period_length);
            for (unsigned i = 0; i < ch.period_length; ++i) CHECK(bf[i] == ch.minima[i]);
            CHECK(bf[ch.period_length] == ch.fundamental_unit);
        }
    }
}

TEST_CASE("predict_period") {
    CHECK(period_threshold(Integer(70)) == 24);
    CHECK(period_threshold(Integer(14)) == 5);
    CHECK(period_threshold(Integer(3)) == 1);
    CHECK(predict_period(cubic(1, 24, 70)).period_length == 3);
    CHECK(predict_period(cubic(1, 24, 70)).chain_class == ChainClass::M2);
    CHECK(predict_period(cubic(1, 23, 70)).period_length == 2);
    CHECK(predict_period(cubic(1, 23, 70)).chain_class == ChainClass::M1);
    CHECK(predict_period(cubic(1, 7, 1)).period_length == 1);
}

TEST_CASE("sufficient_minimum_bound") {
    CHECK(sufficient_minimum_bound(IntElement::theta(cubic(1, 1, 2))));
    CHECK(sufficient_minimum_bound(IntElement::one(cubic(1, 1, 7))));
    CHECK_FALSE(sufficient_minimum_bound(power(IntElement::theta(cubic(1, 1, 7)), 2)));
}

TEST_CASE("threshold_bounds") {
    auto t32 = threshold_bounds(Integer(32));
    CHECK(t32.minimum1.lo == 2);
    CHECK(t32.minimum1.hi == 2);
    CHECK_THROWS_AS(threshold_bounds(Integer(0)), DomainError);
    auto t2 = threshold_bounds(Integer(2));
    CHECK(t2.m2_guarantee.lo == 2);
    CHECK(t2.m2_guarantee.hi == 2);
    auto t1 = threshold_bounds(Integer(1));
    CHECK(t1.minimum1.within(Rational(63, 100), Rational(1, 100)));
    CHECK(t1.minimum1.width() < decimal_error(60));
    auto t30 = threshold_bounds(Integer(30));
    CHECK(t30.minimum1.lo * t30.minimum1.lo * t30.minimum1.lo <= Rational(30, 4));
    CHECK(t30.minimum1.hi * t30.minimum1.hi * t30.minimum1.hi >= Rational(30, 4));
}

TEST_CASE("crucial_triviality_scan agrees with a naive scan") {
    for (long b = 2; b <= 12; ++b) {
        if (!is_squarefree(Integer(b))) continue;
        for (long r = 1; r <= 4; ++r) {
            CAPTURE(r);
            CAPTURE(b);
            auto P = cubic(1, r, b);
            CHECK(crucial_triviality_scan(P) == naive_crucial(r, b, true));
            CHECK(crucial_triviality_scan(P, false) == naive_crucial(r, b, false));
        }
    }
    CHECK(crucial_triviality_scan(cubic(1, 30, 70)));
    CHECK_FALSE(crucial_triviality_scan(cubic(1, 1, 7), false));
    for (long b : {2, 3, 30, 70}) CHECK(crucial_triviality_scan(cubic(1, 2, b)));
}

TEST_CASE("enumeration guard") {
    auto P = cubic(1, 1, 7);
    Embedding emb(P);
    CHECK_THROWS_AS(enumerate_below_one(emb, initial_basis(), 1e7L), CapacityError);
    EnumerationStats st;
    auto pts = enumerate_below_one(emb, initial_basis(), 30.0L, &st);
    CHECK(st.box_points > 0);
    CHECK(st.candidates == pts.size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        CHECK(emb.sign(complement(pts[i]) - complement(pts[i - 1])) >= 0);
}
