#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trinom/fixtures.hpp"
#include "trinom/verify.hpp"

#include <map>

using namespace trinom;

namespace {

std::vector<CellResult> cells_of(const TableReport& rep, const std::string& column) {
    std::vector<CellResult> out;
    for (const auto& c : rep.cells)
        if (c.column == column) out.push_back(c);
    return out;
}

bool same_cells(const TableReport& x, const TableReport& y) {
    if (x.cells.size() != y.cells.size()) return false;
    for (std::size_t i = 0; i < x.cells.size(); ++i) {
        const auto &a = x.cells[i], &b = y.cells[i];
        if (a.row != b.row || a.column != b.column || a.status != b.status || a.computed != b.computed) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parse_fixture") {
    const std::string text =
        "# table: tbl:Test\n"
        "# provenance: hand written\n"
        "b\tr\ta\n"
        "7\t1\t21\n"
        "\n"
        "7\t3\t-\n";
    const auto t = parse_fixture(text);
    CHECK(t.table_id == "tbl:Test");
    CHECK(t.provenance == "hand written");
    CHECK(t.columns == std::vector<std::string>{"b", "r", "a"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.cell(0, "a") == "21");
    CHECK(is_empty_cell(t.cell(1, "a")));
    CHECK(t.column_index("r") == 1u);
    CHECK_FALSE(t.has_column("f"));
    CHECK_THROWS_AS(t.cell(0, "f"), FixtureError);

    CHECK_THROWS_AS(parse_fixture("b\tr\n1\t2\n"), FixtureError);
    CHECK_THROWS_AS(parse_fixture("# table: x\nb\tr\n1\t2\t3\n"), FixtureError);
    CHECK_THROWS_AS(parse_fixture("# table: x\n"), FixtureError);
    CHECK_THROWS_AS(load_fixture("/nonexistent/none.tsv"), FixtureError);
}

TEST_CASE("shipped fixtures") {
    const auto all = load_all_fixtures();
    REQUIRE(all.size() == known_table_ids().size());
    const std::map<std::string, std::size_t> rows = {
        {"tbl:Five", 6},     {"tbl:FourFive", 10}, {"tbl:Four", 20},      {"tbl:Three", 4},
        {"tbl:Two", 14},     {"tbl:One", 19},      {"tbl:OneReal", 19},   {"tbl:TwoReal", 3},
        {"tbl:ThreeReal", 14}, {"tbl:FourReal", 19}, {"tbl:FiveReal", 24}, {"tbl:Symmetric", 12},
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
        CAPTURE(all[i].table_id);
        CHECK(all[i].table_id == known_table_ids()[i]);
        CHECK(all[i].rows.size() == rows.at(all[i].table_id));
        CHECK_FALSE(all[i].provenance.empty());
    }
    CHECK(load_fixture_by_id("tbl:Two").rows.size() == 14);
    CHECK_THROWS_AS(load_fixture_by_id("tbl:Six"), FixtureError);
}

TEST_CASE("simply real rows with b > 1 list a beta entry") {
    for (const auto& t : load_all_fixtures()) {
        if (!t.has_column("Multiplet") || !t.has_column("eps_0")) continue;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            if (t.cell(i, "b") == "1") continue;
            CAPTURE(t.table_id);
            CAPTURE(i);
            CHECK(multiplet_types(t.cell(i, "Multiplet")).count("beta") == 1);
        }
    }
}

TEST_CASE("printed theta expressions") {
    const auto P = cubic(1, 30, 70);
    const OrderElement u = parse_theta_expression(P, "(1-90t)^-1");
    CHECK(u == OrderElement(P, {Rational(51030001), Rational(90), Rational(8100)}));
    CHECK(parse_theta_expression(P, "1-90t") * u == OrderElement::one(P));

    const auto Q = cubic(-1, 8, 6);
    CHECK(parse_theta_expression(Q, "287-2t^2") == OrderElement(Q, {Rational(287), Rational(0), Rational(-2)}));
    CHECK(parse_theta_expression(Q, "t") == OrderElement::theta(Q));
    CHECK(parse_theta_expression(Q, "1+71t+t^2") == OrderElement(Q, {Rational(1), Rational(71), Rational(1)}));
    CHECK(parse_theta_expression(Q, "t^2-12") == OrderElement(Q, {Rational(-12), Rational(0), Rational(1)}));
    CHECK(parse_theta_expression(Q, "44+6t-t^2") == OrderElement(Q, {Rational(44), Rational(6), Rational(-1)}));
    CHECK_THROWS_AS(parse_theta_expression(Q, "1-3x"), DomainError);
    CHECK_THROWS_AS(parse_theta_expression(Q, ""), DomainError);
    CHECK_THROWS_AS(parse_theta_expression(Q, "t^"), DomainError);

    const IntElement eps(P, {1, -90, 0});
    CHECK(same_unit_up_to_sign_and_inverse(eps, u));
    CHECK(same_unit_up_to_sign_and_inverse(-eps, u));
    CHECK(same_unit_up_to_sign_and_inverse(eps, eps.cast<Rational>()));
    CHECK_FALSE(same_unit_up_to_sign_and_inverse(power(eps, 2), u));
}

TEST_CASE("factorization and multiplet cells") {
    CHECK(evaluate_factorization("2^4*5^5*5*29*113") == 819250000);
    CHECK(evaluate_factorization("-2^6*7^7*11*17*499") == Integer("-4918225149376"));
    CHECK(evaluate_factorization("3^6*7^7*139967") == Integer("84030986606049"));
    CHECK(multiplet_types("(alpha_2^4,beta^5)") == std::set<std::string>{"alpha_2", "beta"});
    CHECK(multiplet_types("(beta)") == std::set<std::string>{"beta"});
    CHECK(multiplet_types("(beta_2^6,gamma^10)") == std::set<std::string>{"beta_2", "gamma"});
}

TEST_CASE("verify tbl:Two") {
    const auto rep = verify_table(load_fixture_by_id("tbl:Two"));
    CHECK(rep.rows == 14);
    CHECK(rep.ok());
    for (const auto& c : cells_of(rep, "ClL")) CHECK(c.status == CellStatus::Skipped);
    for (const auto& col : {"a", "f", "d_K", "rho", "eps_0", "Reg", "ell", "Chain", "m", "m1"}) {
        const auto cs = cells_of(rep, col);
        CHECK(cs.size() == 14);
        for (const auto& c : cs) CHECK(c.status == CellStatus::Pass);
    }
}

TEST_CASE("verify tbl:One: Reg and ell computed, Cl(L) skipped") {
    const auto rep = verify_table(load_fixture_by_id("tbl:One"));
    for (const auto& c : cells_of(rep, "ClL")) CHECK(c.status == CellStatus::Skipped);
    for (const auto& c : cells_of(rep, "ell")) CHECK(c.status == CellStatus::Pass);
    // The printed r=20 regulator repeats the r=17 value; it is reported, not masked.
    for (const auto& c : cells_of(rep, "Reg")) {
        CAPTURE(c.row_label);
        CHECK(c.status == (c.row_label == "b=1 r=20" ? CellStatus::Fail : CellStatus::Pass));
    }
}

TEST_CASE("verify tbl:Symmetric") {
    const auto rep = verify_table(load_fixture_by_id("tbl:Symmetric"));
    const auto dl = cells_of(rep, "d_L");
    CHECK(dl.size() == 12);
    for (const auto& c : dl) CHECK(c.status == CellStatus::Pass);
    CHECK(rep.ok());
}

TEST_CASE("a mutated cell is reported by name") {
    auto t = load_fixture_by_id("tbl:Two");
    t.rows[3][*t.column_index("f")] = "22";
    const auto rep = verify_table(t);
    CHECK(rep.count(CellStatus::Fail) == 1);
    for (const auto& c : rep.cells) {
        if (c.status != CellStatus::Fail) continue;
        CHECK(c.column == "f");
        CHECK(c.row == 3);
        CHECK(c.row_label == "b=7 r=6");
        CHECK(c.computed == "21");
    }
    auto u = load_fixture_by_id("tbl:Symmetric");
    u.rows[0][*u.column_index("d_L")] = "819250001";
    CHECK(verify_table(u).count(CellStatus::Fail) == 1);  // the factorization is checked against the computed d_L
}

TEST_CASE("parallel rows merge deterministically") {
    const auto t = load_fixture_by_id("tbl:Four");
    VerifyOptions one, many;
    many.jobs = 4;
    CHECK(same_cells(verify_table(t, one), verify_table(t, many)));
}

TEST_CASE("column filter and class group guard") {
    const auto t = load_fixture_by_id("tbl:Five");
    VerifyOptions opt;
    opt.columns = {"rho"};
    opt.class_group_guard = 100000;
    const auto rep = verify_table(t, opt);
    REQUIRE(rep.cells.size() == 6);
    for (const auto& c : rep.cells) {
        CHECK(c.column == "rho");
        // |d_K| = 27723 fits, the others exceed 10^5
        CHECK(c.status == (c.row_label == "b=2310 r=1" ? CellStatus::Pass : CellStatus::Skipped));
    }
}
