#include "trinom/invariants.hpp"

#include <mpfr.h>

#include <sstream>

namespace trinom {

std::string to_string(ConductorCase c) {
    switch (c) {
        case ConductorCase::Irregular3DividesB: return "IRREGULAR_3_DIVIDES_B";
        case ConductorCase::FEquals9B: return "F_EQUALS_9B";
        case ConductorCase::FEquals3B: return "F_EQUALS_3B";
    }
    return "?";
}

std::string MonogeneityReport::diagnostics() const {
    std::ostringstream os;
    if (failed.empty()) os << "ok";
    for (std::size_t i = 0; i < failed.size(); ++i) os << (i ? "; " : "") << failed[i];
    if (conditional) {
        os << "; CONDITIONAL, unfactored:";
        for (const auto& c : unfactored) os << " " << c;
    }
    return os.str();
}

RawDiscriminants raw_discriminants(const TrinomialParams& params) {
    if (!params.is_cubic()) throw DomainError("raw_discriminants: cubic family only");
    RawDiscriminants out;
    out.dual = Integer(params.sigma()) * 4 * params.r() * params.r() * params.r() * params.b() + 1;
    out.dP = -27 * params.b() * params.b() * out.dual;
    return out;
}

MonogeneityReport monogeneity_test(const TrinomialParams& params) {
    if (!params.is_cubic()) throw DomainError("monogeneity_test: cubic family only");
    MonogeneityReport rep;
    const Integer& b = params.b();
    rep.T = b * b + params.a() - 1;
    if (!is_squarefree(b)) rep.failed.push_back("b not squarefree");
    // For 3 | b the polynomial is 3-Eisenstein and T = -1 mod 3; the
    // 3-adic clause only applies when 3 does not divide b.
    if (b % 3 != 0) {
        if (rep.T == 0 || valuation(rep.T, Integer(3)) != 1) rep.failed.push_back("v3(T) != 1");
    }
    const Integer dual = raw_discriminants(params).dual;
    const Integer three_rb = 3 * params.r() * b;
    auto fac = factorize_within(dual, 2000000);
    for (const auto& pp : fac.factors) {
        if (pp.exponent >= 2 && three_rb % pp.prime != 0) {
            rep.failed.push_back("square of " + pp.prime.str() + " divides the dual discriminant");
        }
    }
    for (const auto& c : fac.unfactored) {
        Integer s = sqrt(c);
        if (s * s == c && three_rb % s != 0) {
            rep.failed.push_back("square of " + s.str() + " divides the dual discriminant");
        } else {
            rep.conditional = true;
            rep.unfactored.push_back(c);
        }
    }
    rep.monogenic = rep.failed.empty();
    return rep;
}

int signed_mod9(const Integer& n) {
    const Integer r = abs(n) % 9;
    return n < 0 ? -r.convert_to<int>() : r.convert_to<int>();
}

FieldInvariants compute_invariants(const TrinomialParams& params) {
    const auto mono = monogeneity_test(params);
    if (!mono.monogenic) throw DomainError("compute_invariants: " + params.describe() + " not monogenic: " + mono.diagnostics());
    const auto raw = raw_discriminants(params);
    FieldInvariants inv;
    inv.monogenic = true;
    inv.T = mono.T;
    inv.dual_disc = raw.dual;
    inv.dP = raw.dP;
    inv.dL = raw.dP;
    inv.partial_factor_failures = mono.unfactored;
    const Integer& b = params.b();
    inv.omega = valuation(b, Integer(3));
    if (b % 3 == 0) {
        inv.conductor_case = ConductorCase::Irregular3DividesB;
        inv.e = 1;
        inv.dK = -3 * raw.dual;
    } else if ((Integer(params.sigma()) * params.r() * b + 1) % 3 == 0) {
        inv.conductor_case = ConductorCase::FEquals9B;
        inv.e = 2;
        if (raw.dual % 3 != 0) throw DomainError("compute_invariants: dual discriminant not divisible by 3");
        inv.dK = -raw.dual / 3;
    } else {
        inv.conductor_case = ConductorCase::FEquals3B;
        inv.e = 1;
        inv.dK = -3 * raw.dual;
    }
    inv.f = ipow(Integer(3), inv.e) * b;
    inv.v3_f = inv.e + inv.omega;
    inv.f0 = inv.f / ipow(Integer(3), inv.v3_f);
    inv.dK_mod9 = signed_mod9(inv.dK);
    inv.f_factorization = factorize(inv.f);
    inv.tau = static_cast<unsigned>(inv.f_factorization.distinct_primes());
    if (inv.f * inv.f * inv.dK != inv.dL) throw DomainError("compute_invariants: dL != f^2 dK");
    return inv;
}

Integer degree_p_discriminant(unsigned p, int sigma, const Integer& r, const Integer& b) {
    if (p < 3 || !is_prime(Integer(p))) throw DomainError("degree_p_discriminant: p must be an odd prime");
    const Integer sign = ((static_cast<unsigned long>(p) * (p - 1) / 2) % 2) ? -1 : 1;
    return sign * ipow(Integer(p), p) * ipow(b, p - 1) *
           (Integer(sigma) * ipow(Integer(p - 1), p - 1) * ipow(r, p) * b + 1);
}

namespace {

constexpr mpfr_prec_t kBits = 256;

struct Mpfr {
    mpfr_t v;
    Mpfr() { mpfr_init2(v, kBits); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;

    Rational exact() const {
        Rational q;
        mpfr_get_q(q.backend().data(), v);
        return q;
    }
};

void set_q(Mpfr& m, const Rational& q, mpfr_rnd_t rnd) { mpfr_set_q(m.v, q.backend().data(), rnd); }

}  // namespace

CertifiedReal certified_log(const Rational& x) {
    if (x <= 0) throw DomainError("certified_log: argument must be positive");
    Mpfr lo, hi;
    set_q(lo, x, MPFR_RNDD);
    set_q(hi, x, MPFR_RNDU);
    mpfr_log(lo.v, lo.v, MPFR_RNDD);
    mpfr_log(hi.v, hi.v, MPFR_RNDU);
    return {lo.exact(), hi.exact()};
}

CertifiedReal certified_cbrt(const Rational& x) {
    Mpfr lo, hi;
    set_q(lo, x, MPFR_RNDD);
    set_q(hi, x, MPFR_RNDU);
    mpfr_cbrt(lo.v, lo.v, MPFR_RNDD);
    mpfr_cbrt(hi.v, hi.v, MPFR_RNDU);
    return {lo.exact(), hi.exact()};
}

CertifiedReal regulator_simply_real(const TrinomialParams& params, const Rational& precision) {
    if (params.sigma() != 1) throw DomainError("regulator_simply_real: sigma = -1 is not supported");
    if (!params.is_cubic()) throw DomainError("regulator_simply_real: cubic family only");
    if (precision <= 0) throw DomainError("regulator_simply_real: precision must be positive");
    const bool unit_theta = params.b() == 1;
    const CertifiedReal log_b = certified_log(Rational(params.b()));
    Rational root_err = precision / 100;
    RootInterval th = real_root(params, root_err);
    for (;;) {
        const CertifiedReal log_lo = certified_log(th.lo), log_hi = certified_log(th.hi);
        CertifiedReal reg;
        if (unit_theta) {
            reg = {-log_hi.hi, -log_lo.lo};
        } else {
            reg = {log_b.lo - 3 * log_hi.hi, log_b.hi - 3 * log_lo.lo};
        }
        if (reg.width() <= precision) return reg;
        root_err /= 16;
        refine_root(params.polynomial(), th, root_err);
    }
}

std::string fixed_decimal(const Rational& q, unsigned decimals) {
    const Integer scale = ipow(Integer(10), decimals);
    const Rational scaled = abs(q) * Rational(scale);
    const Integer n = floor(scaled + Rational(1, 2));
    const Integer ip = n / scale, fp = n % scale;
    std::ostringstream os;
    if (q < 0 && n != 0) os << "-";
    os << ip;
    if (decimals) {
        std::string frac = fp.str();
        os << "." << std::string(decimals - frac.size(), '0') << frac;
    }
    return os.str();
}

std::string CertifiedReal::fixed(unsigned decimals) const { return fixed_decimal(mid(), decimals); }

}  // namespace trinom
