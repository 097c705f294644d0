#include "trinom/quad_forms.hpp"

#include "trinom/numeric.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace trinom {

namespace {

using i128 = __int128;

i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 mod128(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

// g = x a + y b, g >= 0
i128 xgcd128(i128 a, i128 b, i128& x, i128& y) {
    i128 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const i128 q = floor_div128(a, b);
        i128 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw CapacityError("quad_forms: coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t QuadForm::discriminant() const { return narrow(i128(b) * b - i128(4) * a * c); }

bool QuadForm::is_reduced() const {
    if (a <= 0) return false;
    if (!(std::abs(b) <= a && a <= c)) return false;
    if ((std::abs(b) == a || a == c) && b < 0) return false;
    return true;
}

std::string QuadForm::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

bool is_fundamental_discriminant(const Integer& d) {
    if (d == 0 || d == 1) return false;
    const Integer m4 = ((d % 4) + 4) % 4;
    if (m4 == 1) return is_squarefree(abs(d));
    if (m4 != 0) return false;
    const Integer m = d / 4;
    const Integer r = ((m % 4) + 4) % 4;
    return (r == 2 || r == 3) && is_squarefree(abs(m));
}

QuadForm reduce_form(QuadForm f) {
    if (f.a <= 0) throw DomainError("reduce_form: form is not positive definite");
    const i128 D = i128(f.b) * f.b - i128(4) * f.a * f.c;
    i128 a = f.a, b = f.b, c = f.c;
    for (;;) {
        if (b > a || b <= -a) {
            // b <- b + 2ak into (-a, a]
            const i128 k = floor_div128(a - b, 2 * a);
            b += 2 * a * k;
            c = (b * b - D) / (4 * a);
            continue;
        }
        if (c < a || (c == a && b < 0)) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        break;
    }
    return {narrow(a), narrow(b), narrow(c)};
}

QuadForm principal_form(std::int64_t d) {
    if (d >= 0 || (((d % 4) + 4) % 4 > 1)) throw DomainError("principal_form: bad discriminant");
    const std::int64_t k = (d % 2 == 0) ? 0 : 1;
    return {1, k, (k - d) / 4};
}

QuadForm inverse(const QuadForm& f) { return reduce_form({f.a, -f.b, f.c}); }

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    const i128 D = i128(f.b) * f.b - i128(4) * f.a * f.c;
    if (D != i128(g.b) * g.b - i128(4) * g.a * g.c) throw DomainError("compose: discriminant mismatch");
    // Reduced inputs keep every product below about |D|^2.
    const QuadForm fr = reduce_form(f), gr = reduce_form(g);
    const i128 a1 = fr.a, b1 = fr.b, a2 = gr.a, b2 = gr.b;
    const i128 bb = (b1 + b2) / 2;
    i128 x = 0, y = 0, z = 0, w = 0;
    const i128 e = xgcd128(a1, a2, x, y);
    const i128 h = xgcd128(e, bb, z, w);
    const i128 a3 = (a1 / h) * (a2 / h);
    const i128 B = z * x * a1 * b2 + z * y * a2 * b1 + w * ((b1 * b2 + D) / 2);
    if (B % h != 0) throw DomainError("compose: internal divisibility failure");
    const i128 b3 = mod128(B / h, 2 * a3);
    const i128 num = b3 * b3 - D;
    if (num % (4 * a3) != 0) throw DomainError("compose: internal divisibility failure");
    return reduce_form({narrow(a3), narrow(b3), narrow(num / (4 * a3))});
}

QuadForm form_power(QuadForm f, std::uint64_t n) {
    QuadForm acc = principal_form(f.discriminant());
    while (n) {
        if (n & 1) acc = compose(acc, f);
        n >>= 1;
        if (n) f = compose(f, f);
    }
    return acc;
}

std::vector<QuadForm> reduced_forms(std::int64_t d) {
    if (d >= 0 || !is_fundamental_discriminant(Integer(d)))
        throw DomainError("reduced_forms: " + std::to_string(d) + " is not a negative fundamental discriminant");
    std::vector<QuadForm> out;
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b - d) & 1) != 0) continue;
            const std::int64_t num = b * b - d;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a || (b < 0 && a == c)) continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ClassGroupStructure::str() const {
    if (elementary_divisors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < elementary_divisors.size(); ++i) os << (i ? " x " : "") << "C" << elementary_divisors[i];
    return os.str();
}

ClassGroupStructure class_group(const Integer& d, std::int64_t guard) {
    if (abs(d) > guard) {
        throw CapacityError("class_group: |d| = " + abs(d).str() + " exceeds the guard " + std::to_string(guard));
    }
    const std::int64_t dd = d.convert_to<std::int64_t>();
    const auto forms = reduced_forms(dd);
    ClassGroupStructure out;
    out.discriminant = d;
    out.h = forms.size();
    const QuadForm one = principal_form(dd);

    // exponents[p] = cyclic p-factor exponents, largest first.
    std::map<std::uint64_t, std::vector<unsigned>> exponents;
    for (const auto& pp : factorize(Integer(out.h)).factors) {
        const std::uint64_t p = pp.prime.convert_to<std::uint64_t>();
        const unsigned e = pp.exponent;
        std::vector<QuadForm> cur = forms;
        std::vector<unsigned> t;  // t[k-1] = #factors with exponent >= k
        std::uint64_t prev = 1;
        for (unsigned k = 1; k <= e; ++k) {
            std::uint64_t n = 0;
            for (auto& x : cur) {
                x = form_power(x, p);
                if (x == one) ++n;
            }
            unsigned log = 0;
            for (std::uint64_t q = n / prev; q > 1; q /= p) ++log;
            if (log == 0) break;
            t.push_back(log);
            prev = n;
        }
        std::vector<unsigned> ex;
        for (unsigned k = 1; k <= t.size(); ++k) {
            const unsigned exact = t[k - 1] - (k < t.size() ? t[k] : 0);
            for (unsigned i = 0; i < exact; ++i) ex.push_back(k);
        }
        std::sort(ex.rbegin(), ex.rend());
        exponents[p] = ex;
        if (p == 3) out.three_rank = t.empty() ? 0 : t[0];
    }
    std::size_t width = 0;
    for (const auto& [p, ex] : exponents) width = std::max(width, ex.size());
    std::vector<std::uint64_t> divs(width, 1);
    for (const auto& [p, ex] : exponents)
        for (std::size_t i = 0; i < ex.size(); ++i)
            for (unsigned j = 0; j < ex[i]; ++j) divs[i] *= p;
    std::reverse(divs.begin(), divs.end());
    out.elementary_divisors = divs;
    std::uint64_t prod = 1;
    for (auto v : divs) prod *= v;
    if (prod != out.h) throw DomainError("class_group: elementary divisors do not multiply to h");
    return out;
}

}  // namespace trinom
