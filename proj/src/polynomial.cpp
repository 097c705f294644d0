#include "trinom/polynomial.hpp"

#include "trinom/numeric.hpp"

#include <set>

namespace trinom {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // ascending, mod p, trimmed (may be empty = 0)

void trim_p(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powm_u(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_u(u64 a, u64 p) { return powm_u(a, p - 2, p); }

Poly pmod(Poly a, const Poly& m, u64 p) {
    trim_p(a);
    const std::size_t dm = m.size() - 1;
    const u64 lin = inv_u(m.back(), p);
    while (a.size() > dm) {
        const u64 c = mulm(a.back(), lin, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulm(c, m[i], p)) % p;
        trim_p(a);
    }
    return a;
}

Poly pmul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulm(a[i], b[j], p)) % p;
    trim_p(c);
    return c;
}

Poly pdiv(Poly a, const Poly& m, u64 p) {
    trim_p(a);
    const std::size_t dm = m.size() - 1;
    if (a.size() <= dm) return {};
    Poly q(a.size() - dm, 0);
    const u64 lin = inv_u(m.back(), p);
    while (a.size() > dm) {
        const u64 c = mulm(a.back(), lin, p);
        const std::size_t shift = a.size() - 1 - dm;
        q[shift] = c;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulm(c, m[i], p)) % p;
        trim_p(a);
    }
    trim_p(q);
    return q;
}

Poly pgcd(Poly a, Poly b, u64 p) {
    trim_p(a);
    trim_p(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const u64 lin = inv_u(a.back(), p);
        for (auto& c : a) c = mulm(c, lin, p);
    }
    return a;
}

Poly ppowmod(Poly base, u64 e, const Poly& m, u64 p) {
    Poly r{1};
    base = pmod(base, m, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

Poly psub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim_p(a);
    return a;
}

Poly reduce_coeffs(const Vec<Integer>& f, u64 p) {
    Poly out(static_cast<std::size_t>(f.size()));
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        Integer r = f(i) % p;
        if (r < 0) r += p;
        out[static_cast<std::size_t>(i)] = static_cast<u64>(r);
    }
    trim_p(out);
    return out;
}

// Subset sums of factor degrees that lie strictly between 0 and n.
std::set<unsigned> proper_subset_degrees(const std::vector<unsigned>& counts, unsigned n) {
    std::vector<bool> reach(n + 1, false);
    reach[0] = true;
    for (unsigned k = 1; k < counts.size(); ++k)
        for (unsigned c = 0; c < counts[k]; ++c)
            for (unsigned s = n; s >= k; --s)
                if (reach[s - k]) reach[s] = true;
    std::set<unsigned> out;
    for (unsigned s = 1; s < n; ++s)
        if (reach[s]) out.insert(s);
    return out;
}

bool has_rational_root(const Vec<Integer>& f) {
    const Vec<Integer> g = trim(f);
    if (g(0) == 0) return true;
    // Monic: rational roots are integer divisors of the constant term.
    if (g(g.size() - 1) != 1) throw DomainError("rational root test: monic polynomials only");
    std::vector<Integer> divisors{1};
    for (const auto& pp : factorize(g(0)).factors) {
        const std::size_t base = divisors.size();
        Integer pk = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    for (const auto& dv : divisors)
        for (int s : {1, -1})
            if (evaluate(g, Rational(Integer(s) * dv)) == 0) return true;
    return false;
}

}  // namespace

std::vector<unsigned> factor_degrees_mod(const Vec<Integer>& f_in, std::uint64_t prime) {
    Poly f = reduce_coeffs(f_in, prime);
    const unsigned n = static_cast<unsigned>(degree(f_in));
    if (f.size() != n + 1) throw DomainError("factor_degrees_mod: prime divides the leading coefficient");
    Poly df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(mulm(f[i], i % prime, prime));
    trim_p(df);
    if (pgcd(f, df, prime).size() != 1) throw DomainError("factor_degrees_mod: not squarefree modulo prime");

    std::vector<unsigned> counts(n + 1, 0);
    const Poly x{0, 1};
    Poly h = x;
    unsigned k = 0;
    while (f.size() - 1 >= 2 * (k + 1)) {
        ++k;
        h = ppowmod(h, prime, f, prime);
        Poly g = pgcd(f, psub(h, x, prime), prime);
        if (g.size() > 1) {
            counts[k] += static_cast<unsigned>(g.size() - 1) / k;
            f = pdiv(f, g, prime);
            h = pmod(h, f, prime);
        }
    }
    if (f.size() > 1) counts[f.size() - 1] += 1;
    return counts;
}

bool is_irreducible_over_q(const Vec<Integer>& f_in) {
    const Vec<Integer> f = trim(f_in);
    const unsigned n = static_cast<unsigned>(degree(f));
    if (n == 0) throw DomainError("irreducibility: constant polynomial");
    if (n == 1) return true;
    if (has_rational_root(f)) return false;
    if (n <= 3) return true;

    std::set<unsigned> possible;
    for (unsigned s = 1; s < n; ++s) possible.insert(s);
    unsigned tried = 0;
    for (u64 p = 3; tried < 200 && p < 100000; p += 2) {
        if (!is_prime(Integer(p))) continue;
        std::vector<unsigned> counts;
        try {
            counts = factor_degrees_mod(f, p);
        } catch (const DomainError&) {
            continue;  // p divides the discriminant
        }
        ++tried;
        std::set<unsigned> here = proper_subset_degrees(counts, n), keep;
        for (unsigned s : possible)
            if (here.count(s)) keep.insert(s);
        possible.swap(keep);
        if (possible.empty()) return true;
    }
    throw DomainError("irreducibility could not be certified by degree patterns");
}

}  // namespace trinom
