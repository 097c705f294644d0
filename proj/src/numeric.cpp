#include "trinom/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace trinom {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1000000;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic below 3.3e24 with these bases, so exact for u64.
bool miller_rabin_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool fits_u64(const Integer& n) { return n >= 0 && msb(n) < 64; }

// 64 rounds with bases from a fixed-seed generator: deterministic output.
bool miller_rabin_big(const Integer& n) {
    Integer d = n - 1;
    unsigned s = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    std::mt19937_64 gen(0x5eed);
    for (int round = 0; round < 64; ++round) {
        Integer a = Integer(gen()) % (n - 3) + 2;
        Integer x = powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho. Returns 0 when the budget is exhausted.
u64 rho_u64(u64 n, unsigned long budget) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1; c < 64; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 m = 128, r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        unsigned long used = 0;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            used += r;
            r <<= 1;
        } while (g == 1 && used < budget);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
        if (used >= budget) return 0;
    }
    return 0;
}

Integer rho_big(const Integer& n, unsigned long budget) {
    if (!bit_test(n, 0)) return 2;
    for (unsigned c = 1; c < 16; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto f = [&](const Integer& v) { return (v * v + c) % n; };
        unsigned long steps = 0;
        while (d == 1 && steps < budget) {
            x = f(x);
            y = f(f(y));
            d = gcd(Integer(abs(x - y)), n);
            ++steps;
        }
        if (d != 1 && d != n) return d;
        if (steps >= budget) return 0;
    }
    return 0;
}

void split(const Integer& n, unsigned long budget, std::map<Integer, unsigned>& primes,
           std::vector<Integer>& leftover) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++primes[n];
        return;
    }
    Integer f;
    if (fits_u64(n)) {
        u64 g = rho_u64(static_cast<u64>(n), budget);
        f = Integer(g);
    } else {
        f = rho_big(n, budget);
    }
    if (f == 0) {
        leftover.push_back(n);
        return;
    }
    split(f, budget, primes, leftover);
    split(n / f, budget, primes, leftover);
}

Factorization factor_impl(const Integer& n, unsigned long budget) {
    if (n == 0) throw DomainError("factorize: zero has no factorisation");
    Factorization out;
    out.value = n;
    Integer m = abs(n);
    std::map<Integer, unsigned> primes;
    for (u64 p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > m) break;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) primes[Integer(p)] = e;
    }
    if (m > 1) split(m, budget, primes, out.unfactored);
    for (auto& [p, e] : primes) out.factors.push_back({p, e});
    std::sort(out.unfactored.begin(), out.unfactored.end());
    return out;
}

}  // namespace

Integer Factorization::product() const {
    Integer out = 1;
    for (const auto& f : factors) out *= ipow(f.prime, f.exponent);
    for (const auto& c : unfactored) out *= c;
    return out;
}

unsigned Factorization::exponent_of(const Integer& p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

std::string Factorization::str() const {
    std::ostringstream os;
    if (value < 0) os << "-";
    if (factors.empty() && unfactored.empty()) return os.str() + "1";
    bool first = true;
    for (const auto& f : factors) {
        if (!first) os << "*";
        os << f.prime;
        if (f.exponent > 1) os << "^" << f.exponent;
        first = false;
    }
    for (const auto& c : unfactored) {
        if (!first) os << "*";
        os << "(" << c << ")";
        first = false;
    }
    return os.str();
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return miller_rabin_u64(static_cast<u64>(n));
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (n % p == 0) return false;
    return miller_rabin_big(n);
}

Factorization factorize(const Integer& n) { return factor_impl(n, ~0ul); }

Factorization factorize_within(const Integer& n, unsigned long rho_iterations) { return factor_impl(n, rho_iterations); }

unsigned valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw DomainError("valuation: n = 0");
    if (!is_prime(p)) throw DomainError("valuation: " + p.str() + " is not prime");
    Integer m = abs(n);
    unsigned e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

bool is_squarefree(const Integer& n) { return is_power_free(n, 2); }

bool is_power_free(const Integer& n, unsigned k) {
    if (n == 0) throw DomainError("is_power_free: n = 0");
    for (const auto& f : factorize(n).factors)
        if (f.exponent >= k) return false;
    return true;
}

Rational evaluate(const Vec<Integer>& poly, const Rational& x) {
    Rational acc = 0;
    for (Eigen::Index i = poly.size() - 1; i >= 0; --i) acc = acc * x + Rational(poly(i));
    return acc;
}

Rational decimal_error(unsigned digits) { return Rational(1, ipow(Integer(10), digits)); }

void refine_root(const Vec<Integer>& poly, RootInterval& iv, const Rational& target_error) {
    if (target_error <= 0) throw DomainError("refine_root: target error must be positive");
    int s_lo = evaluate(poly, iv.lo).sign();
    int s_hi = evaluate(poly, iv.hi).sign();
    if (s_lo == 0) {
        iv.hi = iv.lo;
        return;
    }
    if (s_hi == 0) {
        iv.lo = iv.hi;
        return;
    }
    if (s_lo == s_hi) throw DomainError("refine_root: interval does not bracket a sign change");

    // Floating Newton proposes a narrow bracket; exact signs decide.
    if (iv.width() > target_error) {
        double x = iv.mid().convert_to<double>();
        for (int it = 0; it < 60; ++it) {
            double f = 0, df = 0;
            for (Eigen::Index i = poly.size() - 1; i >= 0; --i) {
                df = df * x + f;
                f = f * x + poly(i).convert_to<double>();
            }
            if (df == 0) break;
            double nx = x - f / df;
            if (nx == x) break;
            x = nx;
        }
        if (std::isfinite(x)) {
            double delta = 1e-13 * std::max(1.0, std::fabs(x));
            Rational lo(x - delta), hi(x + delta);
            if (iv.contains(lo) && iv.contains(hi)) {
                int a = evaluate(poly, lo).sign(), b = evaluate(poly, hi).sign();
                if (a == s_lo && b == s_hi) {
                    iv.lo = lo;
                    iv.hi = hi;
                }
            }
        }
    }
    while (iv.width() > target_error) {
        Rational m = iv.mid();
        int s = evaluate(poly, m).sign();
        if (s == 0) {
            iv.lo = iv.hi = m;
            return;
        }
        if (s == s_lo)
            iv.lo = m;
        else
            iv.hi = m;
    }
}

RootInterval real_root(const TrinomialParams& params, const Rational& target_error) {
    if (!params.is_cubic()) throw DomainError("real_root: cubic family only");
    RootInterval iv;
    if (params.sigma() > 0) {
        iv = {Rational(0), Rational(1)};
    } else {
        iv = {Rational(-1), Rational(0)};
    }
    refine_root(params.polynomial(), iv, target_error);
    if (iv.lo == iv.hi) throw DomainError("real_root: rational root, polynomial is reducible");
    return iv;
}

}  // namespace trinom
