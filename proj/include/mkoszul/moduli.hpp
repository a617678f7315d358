#ifndef MKOSZUL_MODULI_HPP
#define MKOSZUL_MODULI_HPP

#include <memory>
#include <optional>
#include <unordered_map>

#include "mkoszul/groebner.hpp"
#include "mkoszul/polynomial.hpp"
#include "mkoszul/subsets.hpp"

namespace mkoszul {

enum class RelationType { t1a, t1b, t2, t3a, t3b, t4a, t4b };
std::string relation_type_name(RelationType t);

/// One Gauss-reduced quadratic relation together with its defining data.
/// Families 4a/4b are parameterized by (S, union, p): distinct partners with
/// the same union give the identical polynomial, so the union is recorded.
struct TaggedRelation {
    RelationType type;
    SubsetMask S;
    std::optional<SubsetMask> T;      // partner subset (3a, 3b)
    std::optional<SubsetMask> U;      // interval for 3b; the union S∪T for 4a/4b
    std::optional<int> s;             // removed element (type 2)
    std::optional<int> p;             // boundary power (4a/4b)
    IntPolynomial poly;               // monic, homogeneous quadratic
};

struct QuadraticClassification {
    bool normal;
    std::optional<RelationType> blocked_by;
};

/// Weight-2 normality for a pair of generator indices (|S|,|T| >= 3): normal
/// iff max(S) != max(T) and the sets are disjoint, comparable, or one is an
/// essential MI-complement of the other. Otherwise names the blocking family.
QuadraticClassification classify_quadratic_pair(const SubsetMask& s, const SubsetMask& t);

/// The quadratic presentation of the even-degree cohomology ring of the space
/// of stable genus-zero curves with n+1 marked points: variables X_S for
/// S in {1..n}, |S| >= 3, in canonical order; the raw defining relations and
/// the Gauss-reduced families with pairwise distinct leading monomials.
/// For n <= 2 the ring is the base ring (no variables, no relations).
class ModuliRing {
public:
    explicit ModuliRing(int n);

    int n() const { return n_; }
    const std::vector<SubsetMask>& variables() const { return vars_; }
    const VariableTable& table() const { return table_; }
    const GradedLexOrder& order() const { return order_; }
    int var_index(const SubsetMask& s) const;

    const std::vector<IntPolynomial>& raw_relations() const { return raw_; }
    const std::vector<TaggedRelation>& reduced_relations() const { return reduced_; }
    std::vector<IntPolynomial> reduced_polynomials() const;
    std::vector<Monomial> leading_monomials() const;

    QuadraticClassification classify_quadratic(const SubsetMask& s, const SubsetMask& t) const;

    /// Per-degree counts of monomials normal w.r.t. the reduced leading terms.
    /// With max_degree < 0, counts run through the top nonzero degree.
    /// Counting is by cliques in the normal-pair graph; every square X_S^2 is
    /// a leading monomial, so normal monomials are square-free.
    std::vector<long> hilbert_vector(int max_degree = -1) const;

    Monomial quadratic_monomial(const SubsetMask& s, const SubsetMask& t) const;
    IntPolynomial x(const SubsetMask& s) const;  // the variable X_S as a polynomial

    /// Normal form modulo the reduced relations.
    IntPolynomial normal_form(const IntPolynomial& p) const;

private:
    int n_;
    std::vector<SubsetMask> vars_;
    std::unordered_map<uint64_t, int> index_of_;
    VariableTable table_;
    GradedLexOrder order_;
    std::vector<IntPolynomial> raw_;
    std::vector<TaggedRelation> reduced_;
    std::vector<IntPolynomial> reduced_polys_;
    std::unique_ptr<LeadIndex> lead_index_;
};

/// Emits the reduced relation blocking X_S X_T, or nullopt when the monomial
/// is normal. S and T need not be distinct.
std::optional<TaggedRelation> build_reduced_relation(const ModuliRing& ring, const SubsetMask& s,
                                                     const SubsetMask& t);

// ---------------------------------------------------------------------------
// Boundary-divisor style presentations and the conversion maps into the ring.

struct PresentationGenerator {
    SubsetMask rep;        // canonical representative
    IntPolynomial image;   // substitution into the X_S presentation
};

struct ClassPresentation {
    int n;
    std::vector<PresentationGenerator> generators;
    // linear relations as (generator index, coefficient) combinations
    std::vector<std::vector<std::pair<int, int>>> linear_relations;
    // monomial relations as generator index pairs
    std::vector<std::pair<int, int>> monomial_relations;
};

/// Keel-style presentation on boundary classes D_S, S a subset of {1..n+1}
/// with 2 <= |S| <= n-1, modulo D_S = D_{complement}; representatives avoid
/// the distinguished point n+1. Monomial relations follow Keel's vanishing
/// condition (no representative pair is nested or disjoint).
ClassPresentation keel_presentation(int n);

/// De Concini-Procesi style presentation on Y_S, S a subset of {1..n} with
/// 2 <= |S| <= n; products of incomparable intersecting pairs vanish, and
/// for every pair i != j the classes containing both sum to zero.
ClassPresentation dcp_presentation(int n);

struct PresentationValidation {
    long linear_checked = 0;
    long monomial_checked = 0;
    bool all_reduce_to_zero = true;
};

PresentationValidation validate_presentation(const ModuliRing& ring, const ClassPresentation& p);

struct NonvanishingReport {
    int n;
    struct Square {
        SubsetMask rep;
        bool nonzero;
    };
    std::vector<Square> divisor_squares;             // (image of D_S)^2 != 0 per class
    std::vector<std::pair<int, bool>> top_powers;    // (k, X_{1..n}^k != 0) for k = 1..n-1
    bool all_squares_nonzero = false;
    bool top_powers_nonzero_below = false;           // k < n-1 all nonzero
};

NonvanishingReport nonvanishing_checks(const ModuliRing& ring);

}  // namespace mkoszul

#endif
