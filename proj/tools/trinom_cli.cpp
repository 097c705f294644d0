// trinom: invariants, Voronoi chains, class groups, multiplicities, DPF
// checks and fixture verification for X^3 + sigma 3rb X - b.

#include "trinom/dpf.hpp"
#include "trinom/fixtures.hpp"
#include "trinom/invariants.hpp"
#include "trinom/multiplicity.hpp"
#include "trinom/numeric.hpp"
#include "trinom/quad_forms.hpp"
#include "trinom/verify.hpp"
#include "trinom/voronoi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace trinom;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kCapacity = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Value {
    enum Kind { Null, Int, Real, Bool, Str } kind = Null;
    std::string text;

    static Value null() { return {}; }
    static Value integer(const Integer& n) { return {Int, n.str()}; }
    static Value integer(long long n) { return {Int, std::to_string(n)}; }
    static Value real(std::string s) { return {Real, std::move(s)}; }
    static Value boolean(bool b) { return {Bool, b ? "true" : "false"}; }
    static Value str(std::string s) { return {Str, std::move(s)}; }
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Value>> rows;
};

std::string csv_field(const Value& v) {
    if (v.kind != Value::Str) return v.text;
    if (v.text.find_first_of(",\"\n\r") == std::string::npos) return v.text;
    std::string out = "\"";
    for (char c : v.text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json json_value(const Value& v) {
    switch (v.kind) {
        case Value::Null:
            return nullptr;
        case Value::Bool:
            return v.text == "true";
        case Value::Int: {
            const Integer n(v.text);
            if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
                return n.convert_to<long long>();
            return v.text;
        }
        case Value::Real:
            return std::stod(v.text);
        case Value::Str:
            return v.text;
    }
    return nullptr;
}

void emit(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t j = 0; j < t.header.size(); ++j) obj[t.header[j]] = json_value(row[j]);
            arr.push_back(std::move(obj));
        }
        os << arr.dump(2) << "\n";
        return;
    }
    for (std::size_t j = 0; j < t.header.size(); ++j) os << (j ? "," : "") << t.header[j];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_field(row[j]);
        os << "\n";
    }
}

// "1..6", "4" or "-3..-1"
std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const long v = std::stol(s);
            return {v, v};
        }
        const long lo = std::stol(s.substr(0, dots)), hi = std::stol(s.substr(dots + 2));
        if (lo > hi) throw UsageError("empty range " + s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("bad range " + s);
    }
}

int parse_sigma(const std::string& s) {
    if (s == "+1" || s == "1" || s == "+") return 1;
    if (s == "-1" || s == "-") return -1;
    throw UsageError("sigma must be +1 or -1, got " + s);
}

struct Global {
    std::string format = "csv";
    unsigned decimals = 3;
    unsigned jobs = 1;
    bool quiet = false;
    std::string data_dir = default_fixture_dir().string();
};

void log_line(const Global& g, const std::string& msg) {
    if (!g.quiet) std::cerr << msg << "\n";
}

std::string poly_string(const Vec<Integer>& p) {
    std::ostringstream os;
    for (Eigen::Index i = p.size() - 1; i >= 0; --i) {
        const Integer& c = p(i);
        if (c == 0) continue;
        const bool first = os.tellp() == 0;
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        const Integer a = abs(c);
        if (a != 1 || i == 0) os << a;
        if (i > 0) os << (a != 1 ? "*" : "") << "X" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

// ---- invariants ----

struct InvariantsArgs {
    std::string sigma = "+1";
    std::string b;
    std::string r;
};

int cmd_invariants(const Global& g, const InvariantsArgs& a) {
    const int sigma = parse_sigma(a.sigma);
    const auto [lo, hi] = parse_range(a.r);
    if (lo < 1) throw UsageError("r must be positive");
    const Integer b(a.b);
    if (b < 1) throw UsageError("b must be positive");
    Table t;
    t.header = {"b", "r", "a", "monogenic", "dual", "d_L", "case", "f", "d_K", "d_K_mod9", "omega", "tau", "reason"};
    for (long r = lo; r <= hi; ++r) {
        std::vector<Value> row(t.header.size());
        row[0] = Value::integer(b);
        row[1] = Value::integer(r);
        try {
            const TrinomialParams p(sigma, Integer(r), b);
            row[2] = Value::integer(p.a());
            const auto mono = monogeneity_test(p);
            row[3] = Value::boolean(mono.monogenic);
            row[4] = Value::integer(raw_discriminants(p).dual);
            if (mono.monogenic) {
                const auto inv = compute_invariants(p);
                row[5] = Value::integer(inv.dL);
                row[6] = Value::str(to_string(inv.conductor_case));
                row[7] = Value::integer(inv.f);
                row[8] = Value::integer(inv.dK);
                row[9] = Value::integer(inv.dK_mod9);
                row[10] = Value::integer(inv.omega);
                row[11] = Value::integer(inv.tau);
            } else {
                row[12] = Value::str(mono.diagnostics());
            }
        } catch (const DomainError& e) {
            row[3] = Value::boolean(false);
            row[12] = Value::str(e.what());
        }
        t.rows.push_back(std::move(row));
    }
    emit(t, g.format, std::cout);
    return kOk;
}

// ---- voronoi ----

struct VoronoiArgs {
    long r = 1;
    std::string b;
    bool trace = false;
    bool allow_non_maximal = false;
};

int cmd_voronoi(const Global& g, const VoronoiArgs& a) {
    const TrinomialParams p(1, Integer(a.r), Integer(a.b));
    VoronoiOptions opt;
    opt.allow_non_maximal = a.allow_non_maximal;
    const VoronoiChain ch = voronoi_chain(p, opt);
    Table t;
    t.header = {"field", "value"};
    auto add = [&](const std::string& k, Value v) { t.rows.push_back({Value::str(k), std::move(v)}); };
    add("b", Value::integer(Integer(a.b)));
    add("r", Value::integer(a.r));
    add("maximal_order", Value::boolean(ch.maximal_order));
    add("period_length", Value::integer(ch.period_length));
    add("chain_class", Value::str(to_string(ch.chain_class)));
    for (unsigned i = 0; i < ch.period_length; ++i) {
        add("minimum_" + std::to_string(i), Value::str(ch.minima[i].str()));
        add("norm_" + std::to_string(i), Value::integer(ch.norms[i]));
    }
    add("fundamental_unit", Value::str(ch.fundamental_unit.str()));
    add("minimal_polynomial", Value::str(poly_string(minimal_polynomial(ch.fundamental_unit))));
    if (ch.maximal_order) {
        add("regulator", Value::real(regulator_simply_real(p).fixed(g.decimals)));
    } else {
        add("regulator", Value::null());
    }
    if (a.trace) {
        for (std::size_t i = 0; i < ch.reduced_bases.size(); ++i) {
            if (i > 0) {
                const auto& div = ch.divided[i - 1];
                std::ostringstream os;
                os << "[";
                for (int rr = 0; rr < 3; ++rr) {
                    os << (rr ? "; " : "");
                    for (int cc = 0; cc < 3; ++cc) os << (cc ? " " : "") << to_string(div(rr, cc));
                }
                os << "]";
                add("division_" + std::to_string(i), Value::str(os.str()));
            }
            add("reduction_" + std::to_string(i), Value::str(ch.reduced_bases[i].str()));
        }
    }
    emit(t, g.format, std::cout);
    return kOk;
}

// ---- classgroup ----

int cmd_classgroup(const Global& g, const std::string& d, std::int64_t guard) {
    const auto cg = class_group(Integer(d), guard);
    Table t;
    t.header = {"d", "h", "structure", "three_rank"};
    t.rows.push_back({Value::integer(cg.discriminant), Value::integer(static_cast<long long>(cg.h)),
                      Value::str(cg.str()), Value::integer(cg.three_rank)});
    emit(t, g.format, std::cout);
    return kOk;
}

// ---- multiplicity ----

struct MultiplicityArgs {
    unsigned rho = 0, omega = 0, tau = 1;
    std::optional<unsigned> u, v, delta;
    std::optional<std::string> m, m1;
};

int cmd_multiplicity(const Global& g, const MultiplicityArgs& a) {
    Table t;
    t.header = {"quantity", "value"};
    auto add = [&](const std::string& k, Value v) { t.rows.push_back({Value::str(k), std::move(v)}); };
    if (a.u || a.v) {
        if (!(a.u && a.v)) throw UsageError("--u and --v go together");
        MultiplicityInput in;
        in.rho = a.rho;
        in.omega = a.omega;
        in.tau = a.tau;
        in.u = *a.u;
        in.v = *a.v;
        add("m", Value::integer(multiplicity_free(in)));
    }
    if (a.delta) add("m1", Value::integer(multiplicity_accumulative(a.rho, a.tau, a.omega, *a.delta)));
    if (a.m) {
        std::ostringstream os;
        const auto parts = consistent_partitions(Integer(*a.m), a.rho, a.omega, a.tau);
        for (std::size_t i = 0; i < parts.size(); ++i)
            os << (i ? ";" : "") << "(" << parts[i].first << "," << parts[i].second << ")";
        add("partitions", Value::str(os.str()));
    }
    if (a.m1) {
        const auto d = infer_delta(Integer(*a.m1), a.rho, a.tau, a.omega);
        add("delta", d ? Value::integer(*d) : Value::null());
    }
    if (t.rows.empty()) throw UsageError("nothing to compute: give --u/--v, --delta, --m or --m1");
    emit(t, g.format, std::cout);
    return kOk;
}

// ---- dpf ----

int cmd_dpf(const Global& g, const std::string& sigma, long r, const std::string& b) {
    const TrinomialParams p(parse_sigma(sigma), Integer(r), Integer(b));
    const auto rep = dpf_report(p);
    std::string forced;
    for (const auto& ty : rep.forced_types) forced += (forced.empty() ? "" : "|") + ty;
    Table t;
    t.header = {"b", "r", "sigma", "theta_is_dpf", "trivial", "theta_norm", "theta_sq_norm", "norms_divide_f2",
                "forced_types", "primitive"};
    t.rows.push_back({Value::integer(p.b()), Value::integer(r), Value::integer(p.sigma()),
                      Value::boolean(rep.theta_is_dpf), Value::boolean(rep.trivial), Value::integer(rep.theta_norm),
                      Value::integer(rep.theta_sq_norm), Value::boolean(rep.dpf_norms_divide_f_squared),
                      Value::str(forced), Value::boolean(primitivity_check(p))});
    emit(t, g.format, std::cout);
    return kOk;
}

// ---- verify ----

int cmd_verify(const Global& g, const std::string& which, std::int64_t guard) {
    std::vector<TableFixture> tables;
    try {
        if (which == "all") {
            tables = load_all_fixtures(g.data_dir);
        } else {
            tables.push_back(load_fixture_by_id(which, g.data_dir));
        }
    } catch (const FixtureError& e) {
        throw UsageError(e.what());
    }
    VerifyOptions opt;
    opt.jobs = g.jobs;
    opt.class_group_guard = guard;
    Table t;
    t.header = {"table", "row", "label", "column", "expected", "computed", "status", "note"};
    std::size_t fails = 0;
    for (const auto& tab : tables) {
        const auto rep = verify_table(tab, opt);
        for (const auto& c : rep.cells) {
            t.rows.push_back({Value::str(c.table_id), Value::integer(static_cast<long long>(c.row + 1)),
                              Value::str(c.row_label), Value::str(c.column), Value::str(c.expected),
                              Value::str(c.computed), Value::str(to_string(c.status)), Value::str(c.note)});
            if (c.status == CellStatus::Fail) ++fails;
        }
        std::ostringstream os;
        os << rep.table_id << ": " << rep.rows << " rows, " << rep.count(CellStatus::Pass) << " pass, "
           << rep.count(CellStatus::Fail) << " fail, " << rep.count(CellStatus::Skipped) << " skipped";
        log_line(g, os.str());
        for (const auto& c : rep.cells)
            if (c.status == CellStatus::Fail)
                log_line(g, "  mismatch " + c.row_label + " " + c.column + ": printed " + c.expected + ", computed " +
                                c.computed);
    }
    emit(t, g.format, std::cout);
    return fails ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic trinomial fields X^3 + sigma 3rb X - b"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--decimals", g.decimals, "Decimals for real columns")->check(CLI::Range(0, 30));
    app.add_option("--jobs", g.jobs, "Worker threads for verify")->check(CLI::Range(1, 256));
    app.add_flag("--quiet", g.quiet, "Suppress log lines on stderr");
    app.add_option("--data-dir", g.data_dir, "Fixture directory");

    InvariantsArgs inv;
    auto* c_inv = app.add_subcommand("invariants", "Discriminants, conductor and quadratic resolvent per r");
    c_inv->add_option("--sigma", inv.sigma, "+1 or -1")->required();
    c_inv->add_option("--b", inv.b, "Absolute coefficient b")->required();
    c_inv->add_option("--r", inv.r, "r or a range lo..hi")->required();

    VoronoiArgs vor;
    auto* c_vor = app.add_subcommand("voronoi", "Voronoi chain of Z[theta] for sigma=+1");
    c_vor->add_option("--r", vor.r, "r")->required()->check(CLI::PositiveNumber);
    c_vor->add_option("--b", vor.b, "b")->required();
    c_vor->add_flag("--trace", vor.trace, "Print every reduced and divided basis");
    c_vor->add_flag("--allow-non-maximal", vor.allow_non_maximal, "Run on Z[theta] even if it is not maximal");

    std::string cg_d;
    std::int64_t guard = kClassGroupGuard;
    auto* c_cg = app.add_subcommand("classgroup", "Class group of an imaginary quadratic discriminant");
    c_cg->add_option("--d", cg_d, "Fundamental discriminant d < 0")->required();
    c_cg->add_option("--guard", guard, "Largest |d| attempted");

    MultiplicityArgs mul;
    auto* c_mul = app.add_subcommand("multiplicity", "Multiplicity formulas and their inverses");
    c_mul->add_option("--rho", mul.rho, "3-class rank")->required();
    c_mul->add_option("--omega", mul.omega, "v3(b)");
    c_mul->add_option("--tau", mul.tau, "Number of primes dividing f")->required();
    c_mul->add_option("--u", mul.u, "Free primes");
    c_mul->add_option("--v", mul.v, "Restrictive primes");
    c_mul->add_option("--delta", mul.delta, "Defect for the accumulated multiplicity");
    c_mul->add_option("--m", mul.m, "Multiplicity whose partitions are wanted");
    c_mul->add_option("--m1", mul.m1, "Accumulated multiplicity whose defect is wanted");

    std::string dpf_sigma = "+1", dpf_b;
    long dpf_r = 1;
    auto* c_dpf = app.add_subcommand("dpf", "Absolute DPF report for theta");
    c_dpf->add_option("--sigma", dpf_sigma, "+1 or -1");
    c_dpf->add_option("--r", dpf_r, "r")->required()->check(CLI::PositiveNumber);
    c_dpf->add_option("--b", dpf_b, "b")->required();

    std::string which;
    auto* c_ver = app.add_subcommand("verify", "Recompute the shipped tables");
    c_ver->add_option("table", which, "Table id such as tbl:Two, or all")->required();
    c_ver->add_option("--guard", guard, "Largest |d_K| for class groups");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*c_inv) return cmd_invariants(g, inv);
        if (*c_vor) return cmd_voronoi(g, vor);
        if (*c_cg) return cmd_classgroup(g, cg_d, guard);
        if (*c_mul) return cmd_multiplicity(g, mul);
        if (*c_dpf) return cmd_dpf(g, dpf_sigma, dpf_r, dpf_b);
        if (*c_ver) return cmd_verify(g, which, guard);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const std::exception& e) {
        // DomainError, PreconditionError and malformed numbers are input problems.
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
