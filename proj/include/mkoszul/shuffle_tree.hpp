#ifndef MKOSZUL_SHUFFLE_TREE_HPP
#define MKOSZUL_SHUFFLE_TREE_HPP

#include <string>
#include <vector>

#include "mkoszul/subsets.hpp"

namespace mkoszul {

/// Planar rooted tree whose leaves carry distinct positive labels and whose
/// children are ordered by strictly increasing minimal leaf label (the shuffle
/// condition, revalidated on construction).
class ShuffleTree {
public:
    static ShuffleTree leaf(int label);
    static ShuffleTree node(std::vector<ShuffleTree> children);

    bool is_leaf() const { return children_.empty(); }
    int label() const { return label_; }
    const std::vector<ShuffleTree>& children() const { return children_; }
    int arity() const { return static_cast<int>(children_.size()); }

    int min_leaf() const { return min_leaf_; }
    void collect_leaves(std::vector<int>& out) const;
    std::vector<int> leaves() const;
    SubsetMask leaf_set(int ambient_n) const;

    /// Sum of (arity - 2) over internal vertices.
    int weight() const;

    /// Nested-list form, e.g. [1,[2,3,4]] for a binary root over leaf 1 and a
    /// ternary vertex on 2,3,4. Stable; golden files depend on it.
    std::string serialize() const;
    static ShuffleTree parse(const std::string& text);

    bool operator==(const ShuffleTree& o) const;

private:
    ShuffleTree() : label_(0), min_leaf_(0) {}
    int label_;
    int min_leaf_;
    std::vector<ShuffleTree> children_;
};

struct BasisMembership {
    bool ok = false;
    std::string violating;  // serialization of the first violating subtree
};

/// Membership in the recursive basis: every non-rightmost child of every
/// vertex must not have a binary root.
BasisMembership basis_membership(const ShuffleTree& t);

/// All basis trees with leaf labels 1..n, ordered by weight then by
/// serialization.
std::vector<ShuffleTree> enumerate_basis(int n);

/// Unique decomposition of a basis tree as graftings onto the right comb
/// tau_{k,l}: the root has k children, a spine of l binary vertices hangs at
/// the rightmost slot, and every grafted subtree is a leaf or has a
/// non-binary root. Subtrees are listed in planar (slot) order.
struct CombDecomposition {
    int k = 0;
    int l = 0;
    std::vector<ShuffleTree> subtrees;  // k + l of them
};

CombDecomposition comb_decompose(const ShuffleTree& t);

/// Monomial in the generators X_S, kept as subsets with multiplicity.
struct SubsetMonomial {
    std::vector<std::pair<SubsetMask, int>> factors;  // canonical order, exps > 0

    static SubsetMonomial one() { return {}; }
    bool is_one() const { return factors.empty(); }
    int degree() const;
    void multiply_by(const SubsetMask& s, int e = 1);
    SubsetMonomial times(const SubsetMonomial& o) const;
    bool operator==(const SubsetMonomial& o) const { return factors == o.factors; }
    std::string str() const;
};

/// Tree -> monomial over the tree's leaf set (subsets in the ambient ground
/// set 1..ambient_n). Requires basis membership.
SubsetMonomial phi(const ShuffleTree& t, int ambient_n);

/// Generator-wise replacement X_T -> X_{T \ (S \ {min S})} for the factors of
/// m; every T must be disjoint from S or an (essential) MI-complement of S.
SubsetMonomial f_transform(const SubsetMonomial& m, const SubsetMask& s);

/// Monomial -> basis tree over the given ground set; inverse of phi on
/// monomials all of whose quadratic divisors are normal.
ShuffleTree psi(const SubsetMonomial& m, const SubsetMask& ground);

}  // namespace mkoszul

#endif
