#ifndef MKOSZUL_LINALG_HPP
#define MKOSZUL_LINALG_HPP

#include <map>
#include <vector>

#include "mkoszul/scalar.hpp"

namespace mkoszul {

/// Sparse row over the rationals: (column, coefficient) sorted by column,
/// coefficients nonzero.
using SparseVecQ = std::vector<std::pair<int, Rat>>;

SparseVecQ sparse_axpy(const SparseVecQ& x, const Rat& a, const SparseVecQ& y);  // x + a*y

/// Incremental exact row echelon form. Stored rows are normalized to leading
/// coefficient 1 and keyed by pivot column (the smallest column of the row).
class RationalEchelon {
public:
    /// Fully reduces `row` against the current pivots and returns the residual.
    SparseVecQ residual(SparseVecQ row) const;

    /// Reduce and store; returns true when the row was independent.
    bool insert(SparseVecQ row);

    long rank() const { return static_cast<long>(rows_.size()); }
    const std::map<int, SparseVecQ>& rows() const { return rows_; }

    /// Back-substitution: afterwards no stored row's tail contains another
    /// pivot column (reduced row echelon form).
    void back_substitute();

private:
    std::map<int, SparseVecQ> rows_;
};

long rank_of(const std::vector<SparseVecQ>& rows);

/// Basis of the right nullspace of the matrix with the given rows, one vector
/// per free column, scaled to primitive integer vectors with positive first
/// entry, ordered by free column index.
std::vector<SparseVecQ> nullspace_basis(const std::vector<SparseVecQ>& rows, int ncols);

/// Integer row lattice with gcd-maintaining insertion (Hermite-style pivots).
/// member() decides exact membership of a vector in the integer row span.
using SparseVecZ = std::vector<std::pair<int, Int>>;

class IntegerEchelon {
public:
    void insert(SparseVecZ row);
    bool member(SparseVecZ row) const;
    long rank() const { return static_cast<long>(rows_.size()); }
    const std::map<int, SparseVecZ>& rows() const { return rows_; }

private:
    std::map<int, SparseVecZ> rows_;
};

/// Same machinery over F_ell.
using SparseVecP = std::vector<std::pair<int, int64_t>>;

class FpEchelon {
public:
    explicit FpEchelon(int64_t p) : p_(p) {}
    SparseVecP residual(SparseVecP row) const;
    bool insert(SparseVecP row);
    long rank() const { return static_cast<long>(rows_.size()); }

private:
    int64_t p_;
    std::map<int, SparseVecP> rows_;
};

}  // namespace mkoszul

#endif
