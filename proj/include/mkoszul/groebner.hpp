#ifndef MKOSZUL_GROEBNER_HPP
#define MKOSZUL_GROEBNER_HPP

#include <functional>
#include <optional>
#include <unordered_map>

#include "mkoszul/polynomial.hpp"

namespace mkoszul {

/// Divisor lookup over a fixed list of leading monomials. When every leading
/// monomial is quadratic (the common case here) lookups go through a pair
/// hash; otherwise a linear scan. Returns the smallest index of a divisor.
class LeadIndex {
public:
    LeadIndex(std::vector<Monomial> leads);
    int find_divisor(const Monomial& m) const;
    const std::vector<Monomial>& leads() const { return leads_; }

private:
    std::vector<Monomial> leads_;
    bool all_quadratic_;
    std::unordered_map<uint64_t, int> pair_index_;  // (lo,hi) packed -> basis index
};

/// Normal form of p modulo the monic set G: repeatedly rewrites the largest
/// reducible monomial by the first applicable element of G. No monomial of
/// the result is divisible by any leading monomial of G.
template <class C>
Polynomial<C> reduce(const Polynomial<C>& p, const std::vector<Polynomial<C>>& basis,
                     const GradedLexOrder& order, const LeadIndex& index) {
    for (const auto& g : basis)
        if (!g.is_monic(order)) throw std::invalid_argument("reduce requires monic divisors");
    Polynomial<C> r = p;
    while (!r.is_zero()) {
        const Monomial* best = nullptr;
        const C* coeff = nullptr;
        int divisor = -1;
        for (auto& [m, c] : r.terms()) {
            int d = index.find_divisor(m);
            if (d < 0) continue;
            if (!best || order.less(*best, m)) {
                best = &m;
                coeff = &c;
                divisor = d;
            }
        }
        if (!best) break;
        const auto& g = basis[divisor];
        Monomial q = g.leading_monomial(order).divide_into(*best);
        r -= g.scaled_by(q, *coeff);
    }
    return r;
}

template <class C>
Polynomial<C> reduce(const Polynomial<C>& p, const std::vector<Polynomial<C>>& basis,
                     const GradedLexOrder& order) {
    std::vector<Monomial> leads;
    leads.reserve(basis.size());
    for (auto& g : basis) leads.push_back(g.leading_monomial(order));
    return reduce(p, basis, order, LeadIndex(std::move(leads)));
}

/// lcm(lm f, lm g)/lm(f) * f  -  lcm(lm f, lm g)/lm(g) * g, both monic.
template <class C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g,
                           const GradedLexOrder& order) {
    if (!f.is_monic(order) || !g.is_monic(order))
        throw std::invalid_argument("s_polynomial requires monic inputs");
    const Monomial& lf = f.leading_monomial(order);
    const Monomial& lg = g.leading_monomial(order);
    Monomial l = Monomial::lcm(lf, lg);
    // both leading coefficients are the scalar one (of the right domain)
    return f.scaled_by(lf.divide_into(l), g.leading_term(order).second) -
           g.scaled_by(lg.divide_into(l), f.leading_term(order).second);
}

struct GroebnerOptions {
    int normal_degree_cap = 12;
    /// Counting criterion: quotient dimensions per degree from an independent
    /// oracle; consulted when present.
    std::optional<std::vector<long>> oracle_dims;
    /// Per-degree normal monomial counter override (used when plain
    /// enumeration is infeasible); must agree with `normal_monomials`.
    std::function<long(int)> normal_counter;
    bool parallel = true;
    int jobs = 0;  // 0 = library default
};

struct GroebnerFailure {
    int i = -1, j = -1;
    IntPolynomial normal_form;
};

struct GroebnerCertificate {
    bool verified = false;
    std::vector<IntPolynomial> relations;
    std::vector<Monomial> leading;
    long spairs_total = 0;
    long spairs_skipped_coprime = 0;
    long spairs_reduced = 0;
    std::optional<GroebnerFailure> first_failure;
    std::vector<long> normal_counts;  // degrees 0.. (stops after the first zero)
    bool counting_checked = false;
    bool counting_match = false;
};

/// Reduces every S-pair of the monic homogeneous set G (Buchberger's first
/// criterion skips coprime leading pairs). verified means every S-polynomial
/// reduced to zero, and, when oracle dimensions were supplied, that the
/// per-degree normal monomial counts match them. The outcome and the reported
/// first failure are deterministic and independent of scheduling.
GroebnerCertificate buchberger_verify(const std::vector<IntPolynomial>& basis,
                                      const GradedLexOrder& order,
                                      const GroebnerOptions& options = {});

/// Reference implementation: identical contract, no parallel machinery.
GroebnerCertificate buchberger_verify_serial(const std::vector<IntPolynomial>& basis,
                                             const GradedLexOrder& order,
                                             const GroebnerOptions& options = {});

/// All degree-d monomials over var_count variables not divisible by any of
/// the given leading monomials, in ascending graded-lex order.
std::vector<Monomial> normal_monomials(const std::vector<Monomial>& leading, int degree,
                                       int var_count);

long count_normal_monomials(const std::vector<Monomial>& leading, int degree, int var_count);

}  // namespace mkoszul

#endif
