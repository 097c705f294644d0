#include "trinom/verify.hpp"

#include "trinom/dpf.hpp"
#include "trinom/invariants.hpp"
#include "trinom/multiplicity.hpp"
#include "trinom/numeric.hpp"
#include "trinom/voronoi.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

namespace trinom {

namespace {

Integer parse_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size() || !std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw FixtureError("not an integer cell: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

// "5.257" -> 5257/1000
Rational parse_decimal(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_integer(s));
    const std::string frac = s.substr(dot + 1);
    const Integer whole = parse_integer(s.substr(0, dot) + frac);
    return Rational(whole, ipow(Integer(10), static_cast<unsigned>(frac.size())));
}

std::string join_partitions(const std::vector<std::pair<unsigned, unsigned>>& parts) {
    if (parts.empty()) return "none";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? ";" : "") << "(" << parts[i].first << "," << parts[i].second << ")";
    return os.str();
}

const std::set<std::string> kInputColumns = {"b", "r", "p", "sigma", "q"};

class RowContext {
public:
    RowContext(const TableFixture& t, std::size_t row, const VerifyOptions& opt) : t_(t), row_(row), opt_(opt) {}

    std::vector<CellResult> take() { return std::move(out_); }

    bool wants(const std::string& column) const {
        return opt_.columns.empty() || opt_.columns.count(column) != 0;
    }

    void set_label(std::string label) { label_ = std::move(label); }

    // Runs fn for the column, mapping exceptions to FAIL (or SKIPPED for a
    // capacity guard).
    void check(const std::string& column, const std::function<void(CellResult&)>& fn) {
        if (!wants(column)) return;
        CellResult c;
        c.table_id = t_.table_id;
        c.row = row_;
        c.row_label = label_;
        c.column = column;
        c.expected = t_.cell(row_, column);
        try {
            fn(c);
        } catch (const CapacityError& e) {
            c.status = CellStatus::Skipped;
            c.note = e.what();
        } catch (const std::exception& e) {
            c.status = CellStatus::Fail;
            c.note = e.what();
        }
        out_.push_back(std::move(c));
    }

    void skip(const std::string& column, const std::string& why) {
        check(column, [&](CellResult& c) {
            c.status = CellStatus::Skipped;
            c.note = why;
        });
    }

    static void compare(CellResult& c, const std::string& computed) {
        c.computed = computed;
        c.status = parse_integer(c.expected) == parse_integer(computed) ? CellStatus::Pass : CellStatus::Fail;
    }

private:
    const TableFixture& t_;
    std::size_t row_;
    const VerifyOptions& opt_;
    std::string label_;
    std::vector<CellResult> out_;
};

std::vector<CellResult> verify_cubic_row(const TableFixture& t, std::size_t i, const VerifyOptions& opt) {
    RowContext ctx(t, i, opt);
    const Integer b = parse_integer(t.cell(i, "b"));
    const Integer r_signed = parse_integer(t.cell(i, "r"));
    const int sigma = r_signed < 0 ? -1 : 1;
    const Integer r = abs(r_signed);
    ctx.set_label("b=" + b.str() + " r=" + r_signed.str());
    const TrinomialParams params(sigma, r, b);

    const MonogeneityReport mono = monogeneity_test(params);
    if (!mono.monogenic) {
        for (const auto& col : t.columns) {
            if (kInputColumns.count(col)) continue;
            ctx.check(col, [&](CellResult& c) {
                c.status = CellStatus::Fail;
                c.note = "not monogenic: " + mono.diagnostics();
            });
        }
        return ctx.take();
    }
    const FieldInvariants inv = compute_invariants(params);

    std::optional<VoronoiChain> chain;
    auto get_chain = [&]() -> const VoronoiChain& {
        if (!chain) chain = voronoi_chain(params);
        return *chain;
    };
    auto printed_rho = [&]() -> std::optional<unsigned> {
        const std::string& s = t.cell(i, "rho");
        if (is_empty_cell(s)) return std::nullopt;
        return parse_integer(s).convert_to<unsigned>();
    };
    std::optional<std::vector<std::pair<unsigned, unsigned>>> parts;
    auto get_parts = [&]() -> const std::vector<std::pair<unsigned, unsigned>>& {
        if (!parts) parts = consistent_partitions(parse_integer(t.cell(i, "m")), *printed_rho(), inv.omega, inv.tau);
        return *parts;
    };

    for (const auto& col : t.columns) {
        if (kInputColumns.count(col)) continue;
        const std::string& cell = t.cell(i, col);
        if (col == "a") {
            ctx.check(col, [&](CellResult& c) { RowContext::compare(c, params.a().str()); });
        } else if (col == "f") {
            ctx.check(col, [&](CellResult& c) { RowContext::compare(c, inv.f.str()); });
        } else if (col == "d_K") {
            ctx.check(col, [&](CellResult& c) {
                if (is_empty_cell(cell)) {
                    c.computed = "d_K=" + inv.dK.str();
                    c.status = inv.dK == 1 ? CellStatus::Pass : CellStatus::Fail;
                    c.note = "empty cell expected exactly when d_K = 1";
                } else {
                    RowContext::compare(c, std::to_string(inv.dK_mod9));
                }
            });
        } else if (col == "rho") {
            if (is_empty_cell(cell)) {
                ctx.skip(col, "empty printed cell");
            } else if (sigma < 0) {
                ctx.skip(col, "3-rank of a real quadratic field is not computed");
            } else {
                ctx.check(col, [&](CellResult& c) {
                    const auto g = class_group(inv.dK, opt.class_group_guard);
                    RowContext::compare(c, std::to_string(g.three_rank));
                    c.note = "Cl(" + inv.dK.str() + ") = " + g.str();
                });
            }
        } else if (col == "eps_0") {
            ctx.check(col, [&](CellResult& c) {
                const IntElement& u = get_chain().fundamental_unit;
                c.computed = u.str();
                c.status = same_unit_up_to_sign_and_inverse(u, parse_theta_expression(params, cell)) ? CellStatus::Pass
                                                                                                     : CellStatus::Fail;
                c.note = "compared up to sign and inversion";
            });
        } else if (col == "eps_1") {
            ctx.skip(col, "units of totally real members are out of scope");
        } else if (col == "Reg") {
            if (is_empty_cell(cell)) {
                ctx.skip(col, "empty printed cell");
            } else if (sigma < 0) {
                ctx.skip(col, "regulators of totally real members are out of scope");
            } else {
                ctx.check(col, [&](CellResult& c) {
                    const CertifiedReal reg = regulator_simply_real(params);
                    c.computed = reg.fixed(6);
                    c.status = reg.within(parse_decimal(cell), Rational(1, 1000)) ? CellStatus::Pass : CellStatus::Fail;
                    c.note = "tolerance 0.001";
                });
            }
        } else if (col == "ClL") {
            ctx.skip(col, "class group of L is out of scope");
        } else if (col == "ell") {
            ctx.check(col, [&](CellResult& c) { RowContext::compare(c, std::to_string(get_chain().period_length)); });
        } else if (col == "Chain") {
            ctx.check(col, [&](CellResult& c) {
                c.computed = to_string(get_chain().chain_class);
                c.status = c.computed == cell ? CellStatus::Pass : CellStatus::Fail;
            });
        } else if (col == "m2") {
            ctx.skip(col, "no stated rule for the second accumulated multiplicity");
        } else if (col == "m1") {
            if (is_empty_cell(cell) || !printed_rho()) {
                ctx.skip(col, "empty printed cell");
            } else {
                ctx.check(col, [&](CellResult& c) {
                    const auto delta = infer_delta(parse_integer(cell), *printed_rho(), inv.tau, inv.omega);
                    c.computed = delta ? "delta=" + std::to_string(*delta) : "no delta";
                    c.status = delta ? CellStatus::Pass : CellStatus::Fail;
                    c.note = "(3^(rho+tau+omega-delta)-1)/2 with tau=" + std::to_string(inv.tau) +
                             " omega=" + std::to_string(inv.omega);
                });
            }
        } else if (col == "m") {
            if (is_empty_cell(cell) || !printed_rho()) {
                ctx.skip(col, "empty printed cell");
            } else if (sigma < 0) {
                ctx.skip(col, "defect and effective partition data for totally real members is not tabulated");
            } else {
                ctx.check(col, [&](CellResult& c) {
                    c.computed = join_partitions(get_parts());
                    c.status = get_parts().empty() ? CellStatus::Fail : CellStatus::Pass;
                    c.note = "consistent (u,v) with tau=" + std::to_string(inv.tau);
                });
            }
        } else if (col == "v") {
            if (sigma < 0 || is_empty_cell(cell) || cell.find(',') != std::string::npos || !printed_rho()) {
                ctx.skip(col, sigma < 0 ? "totally real member" : "no single printed value");
            } else {
                ctx.check(col, [&](CellResult& c) {
                    const unsigned v = parse_integer(cell).convert_to<unsigned>();
                    const auto& ps = get_parts();
                    c.computed = join_partitions(ps);
                    const bool found =
                        v <= inv.tau && std::find(ps.begin(), ps.end(), std::make_pair(inv.tau - v, v)) != ps.end();
                    c.status = found ? CellStatus::Pass : CellStatus::Fail;
                });
            }
        } else if (col == "Multiplet") {
            if (b == 1) {
                ctx.skip(col, "b = 1: theta is a unit");
            } else {
                ctx.check(col, [&](CellResult& c) {
                    const DpfReport rep = dpf_report(params);
                    const auto tags = multiplet_types(cell);
                    bool present = false;
                    for (const auto& ty : rep.forced_types) present = present || tags.count(ty);
                    std::string forced;
                    for (const auto& ty : rep.forced_types) forced += (forced.empty() ? "" : "|") + ty;
                    c.computed = "theta DPF=" + std::string(rep.theta_is_dpf ? "yes" : "no") + " forced=" + forced;
                    c.status = (present && rep.theta_is_dpf) ? CellStatus::Pass : CellStatus::Fail;
                    c.note = "forced type present; other type strings not checked";
                });
            }
        } else {
            ctx.skip(col, "no recomputation for this column");
        }
    }
    return ctx.take();
}

std::vector<CellResult> verify_symmetric_row(const TableFixture& t, std::size_t i, const VerifyOptions& opt) {
    RowContext ctx(t, i, opt);
    const unsigned p = parse_integer(t.cell(i, "p")).convert_to<unsigned>();
    const int sigma = parse_integer(t.cell(i, "sigma")) < 0 ? -1 : 1;
    const Integer r = parse_integer(t.cell(i, "r"));
    const Integer q = parse_integer(t.cell(i, "q"));
    ctx.set_label("p=" + std::to_string(p) + " sigma=" + std::to_string(sigma) + " r=" + r.str() + " q=" + q.str());

    std::optional<Integer> dL;
    auto get_dL = [&]() -> const Integer& {
        if (!dL) dL = degree_p_discriminant(p, sigma, r, q);
        return *dL;
    };
    for (const auto& col : t.columns) {
        if (kInputColumns.count(col)) continue;
        const std::string& cell = t.cell(i, col);
        if (col == "a") {
            ctx.check(col, [&](CellResult& c) { RowContext::compare(c, (sigma * Integer(p) * r * q).str()); });
        } else if (col == "d_L") {
            ctx.check(col, [&](CellResult& c) { RowContext::compare(c, get_dL().str()); });
        } else if (col == "Factorization") {
            ctx.check(col, [&](CellResult& c) {
                c.computed = evaluate_factorization(cell).str();
                c.status = evaluate_factorization(cell) == get_dL() ? CellStatus::Pass : CellStatus::Fail;
                c.note = "product of the printed factors against d_L";
            });
        } else if (col == "DPF") {
            ctx.check(col, [&](CellResult& c) {
                const TrinomialParams params(sigma, r, q, DegreeData{p, 1, 0});
                const IntElement th = IntElement::theta(params);
                const Integer n = abs(norm(th));
                const bool dpf = is_ambiguous_principal_generator(th) && principal_ideal_absorption_check(params);
                c.computed = "(" + n.str() + ")" + (dpf ? "" : " not ambiguous");
                c.status = (dpf && c.computed == cell) ? CellStatus::Pass : CellStatus::Fail;
            });
        } else if (col == "order") {
            ctx.skip(col, "Galois group order is not computed");
        } else {
            ctx.skip(col, "no recomputation for this column");
        }
    }
    return ctx.take();
}

}  // namespace

std::string to_string(CellStatus s) {
    switch (s) {
        case CellStatus::Pass:
            return "PASS";
        case CellStatus::Fail:
            return "FAIL";
        case CellStatus::Skipped:
            return "SKIPPED";
    }
    return "?";
}

std::size_t TableReport::count(CellStatus s) const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [&](const auto& c) { return c.status == s; }));
}

TableReport verify_table(const TableFixture& table, const VerifyOptions& options) {
    const bool symmetric = table.has_column("p");
    if (!symmetric && !(table.has_column("b") && table.has_column("r")))
        throw FixtureError(table.table_id + ": neither (b, r) nor (p, sigma, r, q) columns");
    auto row_fn = symmetric ? verify_symmetric_row : verify_cubic_row;

    const std::size_t n = table.rows.size();
    std::vector<std::vector<CellResult>> per_row(n);
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) per_row[i] = row_fn(table, i, options);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) per_row[i] = row_fn(table, i, options);
            });
        }
        for (auto& th : pool) th.join();
    }
    TableReport out;
    out.table_id = table.table_id;
    out.rows = n;
    for (auto& cells : per_row)
        for (auto& c : cells) out.cells.push_back(std::move(c));
    return out;
}

OrderElement parse_theta_expression(const TrinomialParams& params, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    bool inverse = false;
    if (s.size() > 5 && s.front() == '(' && s.compare(s.size() - 4, 4, ")^-1") == 0) {
        inverse = true;
        s = s.substr(1, s.size() - 5);
    }
    if (s.empty()) throw DomainError("parse_theta_expression: empty expression");

    IntElement acc = IntElement::zero(params);
    const IntElement theta = IntElement::theta(params);
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw DomainError("parse_theta_expression: expected sign in '" + text + "'");
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        Integer coef = j > i ? Integer(s.substr(i, j - i)) : Integer(1);
        unsigned k = 0;
        if (j < s.size() && s[j] == 't') {
            k = 1;
            ++j;
            if (j < s.size() && s[j] == '^') {
                std::size_t e = ++j;
                while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
                if (e == j) throw DomainError("parse_theta_expression: missing exponent in '" + text + "'");
                k = static_cast<unsigned>(std::stoul(s.substr(j, e - j)));
                j = e;
            }
        } else if (j == i) {
            throw DomainError("parse_theta_expression: bad term in '" + text + "'");
        }
        acc += power(theta, k) * Integer(sign * coef);
        i = j;
    }
    OrderElement out = acc.cast<Rational>();
    return inverse ? invert(out) : out;
}

bool same_unit_up_to_sign_and_inverse(const IntElement& u, const OrderElement& p) {
    const OrderElement x = u.cast<Rational>();
    if (x == p || x == -p) return true;
    if (p.is_zero()) return false;
    const OrderElement pinv = invert(p);
    return x == pinv || x == -pinv;
}

Integer evaluate_factorization(const std::string& text) {
    std::string s = text;
    Integer sign = 1;
    if (!s.empty() && s[0] == '-') {
        sign = -1;
        s = s.substr(1);
    }
    Integer out = 1;
    std::istringstream in(s);
    std::string factor;
    while (std::getline(in, factor, '*')) {
        const auto caret = factor.find('^');
        const Integer base = parse_integer(factor.substr(0, caret));
        const unsigned e = caret == std::string::npos ? 1 : parse_integer(factor.substr(caret + 1)).convert_to<unsigned>();
        out *= ipow(base, e);
    }
    return sign * out;
}

std::set<std::string> multiplet_types(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '(') s.erase(0, 1);
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::set<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto caret = item.find('^');
        if (caret != std::string::npos) item = item.substr(0, caret);
        if (!item.empty()) out.insert(item);
    }
    return out;
}

}  // namespace trinom
