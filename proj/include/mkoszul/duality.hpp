#ifndef MKOSZUL_DUALITY_HPP
#define MKOSZUL_DUALITY_HPP

#include <optional>

#include "mkoszul/linalg.hpp"
#include "mkoszul/moduli.hpp"

namespace mkoszul {

/// Coordinates on the weight-2 component: unordered generator pairs {i,j}
/// (diagonal included), id(i<=j) = j(j+1)/2 + i. Ring relations and bracket
/// vectors both live here; the pairing is the Kronecker dot product.
struct PairBasis {
    int generators;
    long size() const { return long(generators) * (generators + 1) / 2; }
    int id(int i, int j) const {
        if (i > j) std::swap(i, j);
        return j * (j + 1) / 2 + i;
    }
};

enum class LieFamily { disjoint_pair, cover_sum, interval_bracket };

/// One relation of the homotopy Lie algebra presentation, as a vector of
/// bracket coefficients in the pair basis. The cover sums include the
/// diagonal square Y_S Y_S with coefficient 1.
struct LieRelation {
    LieFamily family;
    SubsetMask S;
    std::optional<SubsetMask> T;
    SparseVecZ vec;
};

std::vector<LieRelation> lie_relations(const ModuliRing& ring);

struct DualCheckReport {
    int n = 0;
    long disjoint_count = 0;
    long cover_count = 0;
    long interval_count = 0;
    long relation_count = 0;
    bool orthogonal = false;
    std::optional<std::pair<int, int>> first_failing_pairing;  // (lie index, raw index)
    bool independent = false;
    long annihilator_dim = 0;
    bool count_matches = false;
    bool pass = false;
};

/// Checks that the three families annihilate every raw relation, that they
/// are linearly independent, and that their number equals the dimension of
/// the annihilator of the relation space.
DualCheckReport verify_dual_presentation(const ModuliRing& ring);

struct QuadraticPresentation {
    enum class Kind { commutative, graded_commutative };
    Kind kind = Kind::commutative;
    int generators = 0;
    bool odd_generators = false;
    std::vector<SparseVecQ> relations;  // weight-2 vectors in the pair basis
};

QuadraticPresentation ring_presentation(const ModuliRing& ring);

/// Dual generators are the dual basis; dual relations are a basis of the
/// annihilator of the relation space in the pair coordinates.
QuadraticPresentation quadratic_dual(const QuadraticPresentation& p);

struct PowerSeries {
    std::vector<Rat> c;  // degree-indexed coefficients, truncated
    int order() const { return static_cast<int>(c.size()) - 1; }
    Rat at(int k) const { return k < static_cast<int>(c.size()) ? c[k] : Rat(0); }
};

PowerSeries series_product(const PowerSeries& a, const PowerSeries& b, int order);

/// f_n: the Hilbert polynomial of the ring, zero-padded to the order.
PowerSeries poincare_series(const ModuliRing& ring, int order);

/// g with f(-t) g(t) = 1 mod t^{order+1}; requires f(0) = 1.
PowerSeries series_inverse(const PowerSeries& f);

/// Dimensions of the quadratic dual algebra, degree by degree, by exact
/// linear algebra on the presented dual relations (iterated quotient of
/// tensor powers; no series identities involved).
PowerSeries dual_hilbert(const ModuliRing& ring, int order);

/// Generating function for ranks of rational homotopy groups: the coefficient
/// of t^k is the rank in homotopy degree k+1. Coefficients must come out as
/// nonnegative integers; anything else throws.
PowerSeries homotopy_rank_series(const ModuliRing& ring, int order);

/// Graded product formula: prod_k (1+t^k)^{r_k} over odd k times
/// (1-t^k)^{-r_k} over even k, with ranks[k] indexed from 1.
PowerSeries pbw_reconstruction(const std::vector<long>& ranks, int order);

struct Hh0Options {
    long word_cap = 2000000;  // refuse degrees with more than this many words
};

/// Per-degree dimensions (degrees 0..max_degree) of the dual algebra modulo
/// the span of graded commutators, over F_ell.
std::vector<long> commutator_quotient_dims(const ModuliRing& ring, int64_t ell, int max_degree,
                                           const Hh0Options& options = {});

/// Literal construction on the full tensor space with explicit commutator
/// rows; exponential-size oracle for cross-checking small cases.
std::vector<long> commutator_quotient_dims_brute(const ModuliRing& ring, int64_t ell,
                                                 int max_degree, const Hh0Options& options = {});

}  // namespace mkoszul

#endif
