#include "trinom/voronoi.hpp"

#include "trinom/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace trinom {

namespace {

constexpr long double kBoxGuard = 1e8L;

Integer lcm_denominator(const Mat<Rational>& m) {
    Integer d = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) d = lcm(d, denominator(m(i, j)));
    return d;
}

Mat<Integer> clear(const Mat<Rational>& m, const Integer& d) {
    Mat<Integer> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = numerator(m(i, j) * Rational(d));
    return out;
}

OrderElement element(const TrinomialParams& params, const Mat<Rational>& m, Eigen::Index j) {
    return OrderElement(params, Vec<Rational>(m.col(j)));
}

void check_cubic_plus(const TrinomialParams& params, const char* who) {
    if (!params.is_cubic()) throw PreconditionError(std::string(who) + ": cubic family only");
    if (params.sigma() != 1) throw PreconditionError(std::string(who) + ": sigma = -1 is not supported");
}

// Image of nu under nu -> (Im nu', Re nu' - nu); kills Q.
struct Plane {
    long double x = 0, y = 0;
    long double norm2() const { return x * x + y * y; }
};

Plane project(const Embedding& emb, const OrderElement& e) {
    const auto c = emb.conjugate(e);
    return {c.imag(), c.real() - emb.real(e)};
}

long long to_ll(long double v, const char* who) {
    if (!(std::fabs(v) < 9e18L)) throw CapacityError(std::string(who) + ": coefficient out of range");
    return std::llround(v);
}

// Lagrange reduction of the projected pair, applied to the exact elements.
void gauss_pair(const Embedding& emb, OrderElement& u, OrderElement& w) {
    for (int iter = 0; iter < 100000; ++iter) {
        Plane pu = project(emb, u), pw = project(emb, w);
        if (pu.norm2() > pw.norm2()) {
            std::swap(u, w);
            std::swap(pu, pw);
        }
        const long long k = to_ll((pu.x * pw.x + pu.y * pw.y) / pu.norm2(), "gauss_pair");
        if (k == 0) return;
        w -= u * Rational(k);
    }
    throw PrecisionError("gauss_pair: no convergence");
}

struct Candidate {
    OrderElement e;
    long long c1 = 0, c2 = 0;  // coefficients on the reduced pair, sign-normalized
    long double conj = 0;      // |e'|^2
};

// Exact order on |e'|^2 = complement(e)(theta).
int compare_conj(Embedding& emb, const Candidate& x, const Candidate& y) {
    const long double scale = std::max(x.conj, y.conj);
    if (x.conj < y.conj - 1e-12L * scale) return -1;
    if (x.conj > y.conj + 1e-12L * scale) return 1;
    return emb.sign(complement(x.e) - complement(y.e));
}

// 0 < |nu| < 1 with nu = c0 + rv; the float value is trusted away from the
// endpoints only.
bool inside_unit(Embedding& emb, const OrderElement& nu, long double val) {
    const long double a = std::fabs(val);
    const long double margin = 1e-12L * (1 + emb.magnitude(nu));
    if (a > 1 + margin) return false;
    if (a < 1 - margin && a > margin) return true;
    if (nu.is_zero()) return false;
    const Rational one(1);
    return emb.compare(nu, one) < 0 && emb.compare(nu, Rational(-1)) > 0;
}

std::vector<Candidate> enumerate_pair(Embedding& emb, const OrderElement& u, const OrderElement& w, long double bound,
                                      EnumerationStats* stats) {
    const TrinomialParams& params = emb.params();
    const Plane pu = project(emb, u), pw = project(emb, w);
    const long double det = pu.x * pw.y - pw.x * pu.y;
    if (det == 0) throw PrecisionError("enumerate: degenerate projection");
    // Inverse of [[pu.x, pw.x], [pu.y, pw.y]].
    const long double i00 = pw.y / det, i01 = -pw.x / det, i10 = -pu.y / det, i11 = pu.x / det;
    const long double X = bound, Y = bound + 1;
    const long double b1 = std::fabs(i00) * X + std::fabs(i01) * Y;
    const long double b2 = std::fabs(i10) * X + std::fabs(i11) * Y;
    const long double points = (2 * std::floor(b1) + 3) * (2 * std::floor(b2) + 3) * 4;
    if (!(points <= kBoxGuard)) {
        std::ostringstream os;
        os << "enumerate: search box of " << points << " points exceeds the 1e8 guard for " << params.describe();
        throw CapacityError(os.str());
    }
    const long long B1 = to_ll(std::floor(b1), "enumerate") + 1, B2 = to_ll(std::floor(b2), "enumerate") + 1;

    const long double ur = emb.real(u), wr = emb.real(w);
    const auto uc = emb.conjugate(u), wc = emb.conjugate(w);
    const long double limit = bound * bound * (1 + 2e-9L) + 1e-30L;
    std::vector<Candidate> out;
    for (long long c1 = 0; c1 <= B1; ++c1) {
        for (long long c2 = -B2; c2 <= B2; ++c2) {
            if (c1 == 0 && c2 <= 0) continue;
            if (stats) ++stats->box_points;
            const auto z = static_cast<long double>(c1) * uc + static_cast<long double>(c2) * wc;
            if (z.imag() * z.imag() > limit) continue;
            const long double rv = c1 * ur + c2 * wr;
            const long double base = std::floor(-rv);
            for (long double c0 = base - 1; c0 <= base + 2; ++c0) {
                const long double val = c0 + rv;
                if (std::fabs(val) > 1.5L) continue;
                const long double re = c0 + z.real();
                const long double conj = re * re + z.imag() * z.imag();
                if (conj > limit) continue;
                const long long k0 = static_cast<long long>(c0);
                OrderElement nu = OrderElement::rational(params, Rational(k0)) + u * Rational(c1) + w * Rational(c2);
                if (!inside_unit(emb, nu, val)) continue;
                const long double margin = 1e-12L * emb.magnitude(nu);
                const int s = std::fabs(val) > margin ? (val > 0 ? 1 : -1) : emb.sign(nu);
                Candidate c{nu, c1, c2, conj};
                if (s < 0) {
                    c.e = -nu;
                    c.c1 = -c1;
                    c.c2 = -c2;
                }
                out.push_back(std::move(c));
            }
        }
    }
    if (stats) stats->candidates += out.size();
    std::sort(out.begin(), out.end(), [&](const Candidate& x, const Candidate& y) { return compare_conj(emb, x, y) < 0; });
    return out;
}

long long xgcd_ll(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::llabs(a);
    }
    long long x1 = 0, y1 = 0;
    const long long g = xgcd_ll(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

LatticeBasis LatticeBasis::from_columns(const Mat<Rational>& columns) {
    if (columns.rows() != 3 || columns.cols() != 3) throw DomainError("LatticeBasis: 3x3 columns required");
    if (columns(0, 0) != 1 || columns(1, 0) != 0 || columns(2, 0) != 0)
        throw DomainError("LatticeBasis: first column must be (1,0,0)");
    if (determinant(columns) == 0) throw DomainError("LatticeBasis: singular basis");
    return {columns, lcm_denominator(columns)};
}

OrderElement LatticeBasis::column(const TrinomialParams& params, int j) const { return element(params, columns, j); }

Mat<Integer> LatticeBasis::scaled() const { return clear(columns, denominator); }

std::string LatticeBasis::str() const {
    const Mat<Integer> s = scaled();
    std::ostringstream os;
    os << "1/" << denominator << " * [";
    for (Eigen::Index i = 0; i < 3; ++i) {
        if (i) os << "; ";
        for (Eigen::Index j = 0; j < 3; ++j) os << (j ? " " : "") << s(i, j);
    }
    os << "]";
    return os.str();
}

LatticeKey lattice_key(const Mat<Rational>& generators) {
    LatticeKey key;
    key.denominator = lcm_denominator(generators);
    key.hnf = hermite_normal_form(clear(generators, key.denominator));
    return key;
}

LatticeBasis canonical_basis(const Mat<Rational>& generators) {
    const LatticeKey key = lattice_key(generators);
    if (key.hnf(0, 0) != key.denominator) throw DomainError("canonical_basis: lattice does not meet Q in Z");
    Mat<Rational> cols(3, 3);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) cols(i, j) = Rational(key.hnf(i, j)) / Rational(key.denominator);
    return LatticeBasis::from_columns(cols);
}

LatticeBasis initial_basis() {
    Mat<Rational> id = Mat<Rational>::Identity(3, 3);
    return LatticeBasis::from_columns(id);
}

Mat<Rational> divide_lattice(const TrinomialParams& params, const Mat<Rational>& generators, const OrderElement& g) {
    const OrderElement inv = invert(g);
    Mat<Rational> out(generators.rows(), generators.cols());
    for (Eigen::Index j = 0; j < generators.cols(); ++j) out.col(j) = (element(params, generators, j) * inv).coords();
    return out;
}

std::vector<OrderElement> enumerate_below_one(Embedding& emb, const LatticeBasis& basis, long double bound,
                                              EnumerationStats* stats) {
    OrderElement u = basis.column(emb.params(), 1), w = basis.column(emb.params(), 2);
    gauss_pair(emb, u, w);
    std::vector<OrderElement> out;
    for (auto& c : enumerate_pair(emb, u, w, bound, stats)) out.push_back(std::move(c.e));
    return out;
}

Reduction reduce(Embedding& emb, const LatticeBasis& basis) {
    const TrinomialParams& params = emb.params();
    check_cubic_plus(params, "reduce");
    OrderElement u = basis.column(params, 1), w = basis.column(params, 2);
    gauss_pair(emb, u, w);

    // Any v - round(v) has 0 < |.| < 1, so its |.'| bounds the minimum.
    long double best = -1;
    for (const OrderElement& v : {u, w, u + w, u - w}) {
        const long double k = std::nearbyint(emb.real(v));
        const OrderElement t = v - OrderElement::rational(params, Rational(to_ll(k, "reduce")));
        const long double c = emb.conjugate_norm(t);
        if (best < 0 || c < best) best = c;
    }
    auto cands = enumerate_pair(emb, u, w, std::sqrt(best) * (1 + 1e-9L), nullptr);
    if (cands.empty()) throw PrecisionError("reduce: no candidate inside the search box");
    if (cands.size() > 1 && compare_conj(emb, cands[0], cands[1]) == 0)
        throw DomainError("reduce: two candidates with equal |nu'|, refusing to choose");
    const Candidate& phi = cands[0];

    long long s = 0, t = 0;
    if (xgcd_ll(phi.c1, phi.c2, s, t) != 1) throw DomainError("reduce: adjacent minimum is not primitive");
    // det [[c1, -t], [c2, s]] = 1
    OrderElement h = w * Rational(s) - u * Rational(t);

    // Least |h' + k phi' + m| over integers k, m.
    const auto pc = emb.conjugate(phi.e);
    const auto hc = emb.conjugate(h);
    const long double im = pc.imag();
    long long k0 = 0, span = 2;
    if (std::fabs(im) > 1e-30L) {
        k0 = to_ll(-hc.imag() / im, "reduce");
        span = std::min<long long>(2 + static_cast<long long>(1 / (2 * std::fabs(im))), 1000000);
    }
    long double best_h = -1;
    long long bk = 0, bm = 0;
    for (long long k = k0 - span; k <= k0 + span; ++k) {
        const auto z = hc + static_cast<long double>(k) * pc;
        const long long m = to_ll(-z.real(), "reduce");
        const long double n = std::norm(z + static_cast<long double>(m));
        if (best_h < 0 || n < best_h) {
            best_h = n;
            bk = k;
            bm = m;
        }
    }
    h += phi.e * Rational(bk);
    h += OrderElement::rational(params, Rational(bm));
    if (emb.sign(h) < 0) h = -h;

    Mat<Rational> cols(3, 3);
    cols.col(0) = OrderElement::one(params).coords();
    cols.col(1) = phi.e.coords();
    cols.col(2) = h.coords();
    return {LatticeBasis::from_columns(cols), phi.e};
}

VoronoiStep voronoi_step(Embedding& emb, const LatticeBasis& basis) {
    const TrinomialParams& params = emb.params();
    const Reduction r = reduce(emb, basis);
    Mat<Rational> divided = divide_lattice(params, r.basis.columns, r.minimum);
    const Reduction next = reduce(emb, canonical_basis(divided));
    return {r.minimum, std::move(divided), next.basis};
}

VoronoiStep voronoi_step(const TrinomialParams& params, const LatticeBasis& basis) {
    check_cubic_plus(params, "voronoi_step");
    Embedding emb(params);
    return voronoi_step(emb, basis);
}

std::string to_string(ChainClass c) { return "M" + std::to_string(static_cast<int>(c)); }

VoronoiChain voronoi_chain(const TrinomialParams& params, const VoronoiOptions& options) {
    check_cubic_plus(params, "voronoi_chain");
    const bool maximal = monogeneity_test(params).monogenic;
    if (!maximal && !options.allow_non_maximal)
        throw PreconditionError("voronoi_chain: " + params.describe() + " is not monogenic");

    Embedding emb(params);
    VoronoiChain chain{params, {IntElement::one(params)}, {Integer(1)}, 0, ChainClass::M0, IntElement::one(params),
                       {},     {},                         {},          maximal};
    const LatticeBasis start = initial_basis();
    std::vector<LatticeKey> seen{lattice_key(start.columns)};
    Reduction r = reduce(emb, start);
    chain.reduced_bases.push_back(r.basis);
    OrderElement nu = OrderElement::one(params);

    for (unsigned step = 1; step <= options.max_steps; ++step) {
        const OrderElement phi = r.minimum;
        chain.relative_minima.push_back(phi);
        nu = nu * phi;
        Mat<Rational> divided = divide_lattice(params, r.basis.columns, phi);
        const LatticeBasis next = canonical_basis(divided);
        chain.divided.push_back(std::move(divided));
        const LatticeKey key = lattice_key(next.columns);
        r = reduce(emb, next);
        chain.reduced_bases.push_back(r.basis);
        const IntElement nu_int = to_integral(nu);
        if (key == seen.front()) {
            if (!is_unit(nu_int)) throw DomainError("voronoi_chain: period closed on a non-unit");
            chain.period_length = step;
            chain.fundamental_unit = nu_int;
            unsigned k = 0;
            for (const auto& n : chain.norms)
                if (abs(n) > 1) ++k;
            if (k > 2) throw DomainError("voronoi_chain: more than two non-unit minima in one period");
            chain.chain_class = static_cast<ChainClass>(k);
            return chain;
        }
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw DomainError("voronoi_chain: lattice repeated away from the start");
        seen.push_back(key);
        chain.minima.push_back(nu_int);
        chain.norms.push_back(norm(nu_int));
    }
    throw DomainError("voronoi_chain: no period within " + std::to_string(options.max_steps) + " steps for " +
                      params.describe());
}

Integer period_threshold(const Integer& b) { return (b + 2) / 3; }

PeriodPrediction predict_period(const TrinomialParams& params) {
    check_cubic_plus(params, "predict_period");
    if (params.b() == 1) return {1, ChainClass::M0};
    if (params.r() < period_threshold(params.b())) return {2, ChainClass::M1};
    return {3, ChainClass::M2};
}

bool is_lattice_minimum(const IntElement& e, EnumerationStats* stats) {
    const TrinomialParams& params = e.params();
    check_cubic_plus(params, "is_lattice_minimum");
    if (e.is_zero()) return false;
    Mat<Rational> id = Mat<Rational>::Identity(3, 3);
    const Mat<Rational> lat = divide_lattice(params, id, e.cast<Rational>());
    const LatticeKey key = lattice_key(lat);
    // Lattice meets Q in (h00/den) Z; a generator below 1 dominates 1.
    if (key.hnf(0, 0) != key.denominator) return false;
    Embedding emb(params);
    const auto cands = enumerate_below_one(emb, canonical_basis(lat), 1.0L, stats);
    const OrderElement one = OrderElement::one(params);
    for (const auto& nu : cands) {
        if (emb.sign(one - complement(nu)) >= 0) return false;
    }
    return true;
}

bool sufficient_minimum_bound(const IntElement& e) {
    const Integer n = norm(e);
    return 27 * ipow(abs(n), 4) < abs(raw_discriminants(e.params()).dP);
}

ThresholdBounds threshold_bounds(const Integer& b) {
    if (b < 1) throw DomainError("threshold_bounds: b must be positive");
    const CertifiedReal m1 = certified_cbrt(Rational(b, 4));
    const CertifiedReal c = certified_cbrt(Rational(b * b, 4));
    return {m1, {Rational(b) * c.lo, Rational(b) * c.hi}};
}

bool crucial_triviality_scan(const TrinomialParams& params, bool divisibility) {
    check_cubic_plus(params, "crucial_triviality_scan");
    const Integer& r = params.r();
    const Integer& b = params.b();
    if (b < 2) throw PreconditionError("crucial_triviality_scan: b >= 2 required");
    const Integer D = 3 * r * b + 1;
    const Integer T = 1 + 2 * r * b;
    const Integer W_up = 1 + 2 * (sqrt(D) + 1);
    // z (2 r^2 b + 1/(2r)) = t + w/(6r) + 2ru with |t| < T, |w| < W, |u| < b.
    const Rational zb = (Rational(T) + Rational(W_up, 6 * r) + Rational(2 * r * b)) /
                        (Rational(2 * r * r * b) + Rational(1, 2 * r));
    const Integer zmax = floor(zb) + 1;
    auto w_ok = [&](const Integer& w) {
        const Integer a = abs(w) - 1;
        return a < 0 || a * a < 4 * D;
    };
    for (Integer z = -zmax; z <= zmax; ++z) {
        const Integer ylo = floor(Rational(3 * z - W_up, 6 * r)) - 1;
        const Integer yhi = ceil(Rational(3 * z + W_up, 6 * r)) + 1;
        for (Integer y = ylo; y <= yhi; ++y) {
            if (divisibility && y % b != 0) continue;
            if (!w_ok(3 * z - 6 * r * y)) continue;
            for (Integer x = 2 * r * b * z - b + 1; x < 2 * r * b * z + b; ++x) {
                if (divisibility && x % b != 0) continue;
                if (x == 0 && y == 0 && z == 0) continue;
                if (abs(6 * r * r * b * z + y - 2 * r * x) < T) return false;
            }
        }
    }
    return true;
}

std::vector<IntElement> brute_force_minima(const TrinomialParams& params, unsigned coord_bound) {
    check_cubic_plus(params, "brute_force_minima");
    Embedding emb(params);
    const long double th = emb.theta();
    const long long B = coord_bound;
    struct Point {
        long long x, y, z;
        long double v, conj;
    };
    std::vector<Point> pts;
    auto elem = [&](const Point& p) { return OrderElement(params, {Rational(p.x), Rational(p.y), Rational(p.z)}); };
    const std::complex<long double> tc(-th / 2, std::sqrt(to_long_double(params.a()) + 3 * th * th / 4));
    for (long long z = -B; z <= B; ++z) {
        for (long long y = -B; y <= B; ++y) {
            const long double s = y * th + z * th * th;
            const long long lo = std::max(-B, static_cast<long long>(std::floor(-s)) - 1);
            const long long hi = std::min(B, static_cast<long long>(std::floor(1 - s)) + 1);
            for (long long x = lo; x <= hi; ++x) {
                if (x == 0 && y == 0 && z == 0) continue;
                const long double v = x + s;
                const long double margin = 1e-12L * (std::llabs(x) + std::llabs(y) * th + std::llabs(z) * th * th + 1);
                if (v < -margin || v > 1 + margin) continue;
                Point p{x, y, z, v, 0};
                if (v <= margin || v >= 1 - margin) {
                    const OrderElement e = elem(p);
                    if (emb.sign(e) <= 0 || emb.compare(e, Rational(1)) > 0) continue;
                }
                p.conj = std::norm(static_cast<long double>(x) + tc * (static_cast<long double>(y) + tc * static_cast<long double>(z)));
                pts.push_back(p);
            }
        }
    }
    auto real_less = [&](const Point& p, const Point& q) {
        const long double scale = 1e-12L * (1 + std::fabs(p.v) + std::fabs(q.v)) * (1 + B);
        if (p.v < q.v - scale) return true;
        if (p.v > q.v + scale) return false;
        return emb.compare(elem(p), elem(q)) < 0;
    };
    std::sort(pts.begin(), pts.end(), real_less);
    // Ascending real value: nu is a minimum iff |nu'| is below every |mu'|
    // seen so far.
    std::vector<IntElement> out;
    const Point* best = nullptr;
    for (const Point& p : pts) {
        bool below = true;
        if (best) {
            const long double scale = 1e-12L * std::max(p.conj, best->conj);
            if (p.conj > best->conj + scale) {
                below = false;
            } else if (p.conj >= best->conj - scale) {
                below = emb.sign(complement(elem(*best)) - complement(elem(p))) > 0;
            }
        }
        if (below) {
            best = &p;
            out.push_back(to_integral(elem(p)));
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace trinom
