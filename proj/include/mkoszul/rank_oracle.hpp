#ifndef MKOSZUL_RANK_ORACLE_HPP
#define MKOSZUL_RANK_ORACLE_HPP

#include <unordered_map>

#include "mkoszul/linalg.hpp"
#include "mkoszul/polynomial.hpp"

namespace mkoszul {

struct OracleOptions {
    long monomial_cap = 200000;  // refuse degrees whose monomial count exceeds this
};

/// Dimension of the degree-d component of the quotient by the given
/// homogeneous relations, by exact row reduction of the span
/// { m*r : r relation, deg(m*r) = d } inside the full monomial basis.
/// No Groebner machinery is involved.
inline long graded_quotient_dim(const std::vector<RatPolynomial>& relations, int var_count,
                                int degree, const OracleOptions& options = {}) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Monomial> cols;
    std::unordered_map<Monomial, int, MonomialHash> col_of;
    for_each_monomial_of_degree(var_count, degree, [&](const Monomial& m) {
        col_of.emplace(m, static_cast<int>(cols.size()));
        cols.push_back(m);
        if (static_cast<long>(cols.size()) > options.monomial_cap)
            throw std::runtime_error("graded_rank_oracle: monomial count exceeds cap");
    });

    RationalEchelon ech;
    for (const auto& r : relations) {
        if (r.is_zero()) continue;
        if (!r.is_homogeneous()) throw std::invalid_argument("oracle requires homogeneous relations");
        int d = r.degree();
        if (d > degree) continue;
        for_each_monomial_of_degree(var_count, degree - d, [&](const Monomial& m) {
            SparseVecQ row;
            row.reserve(r.terms().size());
            for (auto& [mm, c] : r.terms()) row.push_back({col_of.at(m * mm), c});
            std::sort(row.begin(), row.end());
            ech.insert(std::move(row));
        });
    }
    return static_cast<long>(cols.size()) - ech.rank();
}

/// Quotient dimensions for degrees 0..max_degree.
inline std::vector<long> graded_quotient_dims(const std::vector<RatPolynomial>& relations,
                                              int var_count, int max_degree,
                                              const OracleOptions& options = {}) {
    std::vector<long> dims;
    for (int d = 0; d <= max_degree; ++d)
        dims.push_back(graded_quotient_dim(relations, var_count, d, options));
    return dims;
}

/// Exact ideal-span membership of a homogeneous element, degreewise.
inline bool in_ideal_span(const RatPolynomial& q, const std::vector<RatPolynomial>& relations,
                          int var_count, const OracleOptions& options = {}) {
    if (q.is_zero()) return true;
    if (!q.is_homogeneous()) throw std::invalid_argument("membership check requires homogeneous input");
    int degree = q.degree();
    std::vector<Monomial> cols;
    std::unordered_map<Monomial, int, MonomialHash> col_of;
    for_each_monomial_of_degree(var_count, degree, [&](const Monomial& m) {
        col_of.emplace(m, static_cast<int>(cols.size()));
        cols.push_back(m);
        if (static_cast<long>(cols.size()) > options.monomial_cap)
            throw std::runtime_error("in_ideal_span: monomial count exceeds cap");
    });
    RationalEchelon ech;
    for (const auto& r : relations) {
        if (r.is_zero() || r.degree() > degree) continue;
        for_each_monomial_of_degree(var_count, degree - r.degree(), [&](const Monomial& m) {
            SparseVecQ row;
            for (auto& [mm, c] : r.terms()) row.push_back({col_of.at(m * mm), c});
            std::sort(row.begin(), row.end());
            ech.insert(std::move(row));
        });
    }
    SparseVecQ target;
    for (auto& [m, c] : q.terms()) target.push_back({col_of.at(m), c});
    std::sort(target.begin(), target.end());
    return ech.residual(std::move(target)).empty();
}

}  // namespace mkoszul

#endif
