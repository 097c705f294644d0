#pragma once

#include "trinom/embedding.hpp"
#include "trinom/invariants.hpp"
#include "trinom/order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trinom {

// Columns are the coordinates of (1, g, h) on (1, theta, theta^2).
struct LatticeBasis {
    Mat<Rational> columns;
    Integer denominator;  // least common denominator of the entries

    // Validates column 0 = (1,0,0) and det != 0, fills denominator.
    static LatticeBasis from_columns(const Mat<Rational>& columns);

    OrderElement column(const TrinomialParams& params, int j) const;
    // Integer matrix denominator * columns.
    Mat<Integer> scaled() const;
    std::string str() const;
};

// Canonical form of a full lattice: common denominator and the HNF of the
// denominator-cleared generator matrix.
struct LatticeKey {
    Integer denominator;
    Mat<Integer> hnf;

    friend bool operator==(const LatticeKey& x, const LatticeKey& y) {
        return x.denominator == y.denominator && x.hnf == y.hnf;
    }
};

// Generators are the columns; any spanning set of rank 3.
LatticeKey lattice_key(const Mat<Rational>& generators);

// Basis (1, u, w) read off the HNF. DomainError unless the lattice meets Q
// in exactly Z.
LatticeBasis canonical_basis(const Mat<Rational>& generators);

// (1, theta, theta^2).
LatticeBasis initial_basis();

// Columns multiplied by g^-1 = complement(g) / N(g), order kept.
Mat<Rational> divide_lattice(const TrinomialParams& params, const Mat<Rational>& generators, const OrderElement& g);

struct EnumerationStats {
    unsigned long long box_points = 0;
    unsigned long long candidates = 0;
};

// All nu in the lattice with 0 < nu < 1 and |nu'| <= bound (up to a 1e-9
// relative float slack on the |nu'| side), each of the pair +-nu once with
// the positive representative. Sorted by |nu'| ascending, exact order.
// The lattice must contain 1 as a primitive vector (column 0 = (1,0,0)).
// CapacityError if the box exceeds 1e8 points.
std::vector<OrderElement> enumerate_below_one(Embedding& emb, const LatticeBasis& basis, long double bound,
                                              EnumerationStats* stats = nullptr);

struct Reduction {
    LatticeBasis basis;    // (1, g, h)
    OrderElement minimum;  // g: 0 < g < 1 with the least |g'|
};

// g is the minimum adjacent to 1. h completes (1, g) to a basis and is
// chosen with |h'| least modulo Z + Z g, then h > 0; h is informative only.
Reduction reduce(Embedding& emb, const LatticeBasis& basis);

struct VoronoiStep {
    OrderElement relative_minimum;  // g of the reduced input
    Mat<Rational> divided;          // (1/g, g/g, h/g) before reduction
    LatticeBasis next;              // reduced basis of the divided lattice
};

// Reduce `basis`, divide by its g and reduce again.
VoronoiStep voronoi_step(Embedding& emb, const LatticeBasis& basis);
VoronoiStep voronoi_step(const TrinomialParams& params, const LatticeBasis& basis);

enum class ChainClass { M0 = 0, M1 = 1, M2 = 2 };
std::string to_string(ChainClass c);

struct VoronoiOptions {
    // Run on the equation order Z[theta] even when it is not maximal.
    bool allow_non_maximal = false;
    unsigned max_steps = 100;
};

struct VoronoiChain {
    TrinomialParams params;
    std::vector<IntElement> minima;  // nu^0 = 1, ..., nu^(l-1)
    std::vector<Integer> norms;
    unsigned period_length = 0;
    ChainClass chain_class = ChainClass::M0;
    IntElement fundamental_unit;  // nu^l
    std::vector<OrderElement> relative_minima;
    std::vector<LatticeBasis> reduced_bases;  // reduced bases 0..l
    std::vector<Mat<Rational>> divided;       // divided lattices 1..l
    bool maximal_order = true;
};

// sigma=+1 cubics. PreconditionError for sigma=-1 or (unless allowed) a
// non-monogenic trinomial; DomainError if no period within max_steps.
VoronoiChain voronoi_chain(const TrinomialParams& params, const VoronoiOptions& options = {});

// ceil(b / 3)
Integer period_threshold(const Integer& b);

struct PeriodPrediction {
    unsigned period_length = 1;
    ChainClass chain_class = ChainClass::M0;
};

PeriodPrediction predict_period(const TrinomialParams& params);

// e is a lattice minimum of Z[theta]: no nonzero nu with |nu| <= |e| and
// |nu'| <= |e'|, one of them strict.
bool is_lattice_minimum(const IntElement& e, EnumerationStats* stats = nullptr);

// 27 N(e)^4 < |dL| with dL = -27 b^2 (4 sigma r^3 b + 1).
bool sufficient_minimum_bound(const IntElement& e);

struct ThresholdBounds {
    CertifiedReal minimum1;      // (b/4)^(1/3)
    CertifiedReal m2_guarantee;  // b (b^2/4)^(1/3)
};

// Defined for every b >= 1; the family itself needs b squarefree.
ThresholdBounds threshold_bounds(const Integer& b);

// Integer triples with b | x, b | y (unless divisibility is false) and
//   |x - 2rbz| < b, |3z - 6ry| < 1 + 2 sqrt(3rb + 1), |6r^2bz + y - 2rx| < 1 + 2rb.
// True iff (0,0,0) is the only one.
bool crucial_triviality_scan(const TrinomialParams& params, bool divisibility = true);

// Minima of Z[theta] among coordinates in [-B, B]^3 with real value in
// (0, 1], sorted by descending real value. Domination is only tested inside
// the box, so the tail may hold points whose dominators lie outside.
std::vector<IntElement> brute_force_minima(const TrinomialParams& params, unsigned coord_bound);

}  // namespace trinom
