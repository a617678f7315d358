#ifndef MKOSZUL_POLYNOMIAL_HPP
#define MKOSZUL_POLYNOMIAL_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mkoszul/monomial.hpp"
#include "mkoszul/scalar.hpp"

namespace mkoszul {

/// Sparse polynomial with exact coefficients of type C. Terms are kept in the
/// structural monomial order with no zero coefficients; the admissible order
/// enters only through the operations that take one.
template <class C>
class Polynomial {
public:
    using Term = std::pair<Monomial, C>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial term(const Monomial& m, C c) {
        Polynomial p;
        if (!scalar_is_zero(c)) p.terms_.push_back({m, std::move(c)});
        return p;
    }

    static Polynomial variable(int v, C c) { return term(Monomial::variable(v), std::move(c)); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    bool is_homogeneous() const {
        for (auto& [m, c] : terms_)
            if (m.degree() != terms_.front().first.degree()) return false;
        return true;
    }

    /// Degree of the polynomial (max over terms); -1 for zero.
    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    C coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) return it->second;
        return C();
    }

    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r;
        for (auto& [m, c] : terms_) r += o.scaled_by(m, c);
        return r;
    }

    /// this * (c * m) with term order preserved (multiplying by a fixed
    /// monomial is structurally monotone).
    Polynomial scaled_by(const Monomial& m, const C& c) const {
        Polynomial r;
        if (scalar_is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& [mm, cc] : terms_) {
            C prod = cc * c;
            if (!scalar_is_zero(prod)) r.terms_.push_back({mm * m, prod});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        return r;
    }

    Polynomial negated() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    /// Leading term with respect to an admissible order.
    const Term& leading_term(const GradedLexOrder& order) const {
        if (is_zero()) throw std::invalid_argument("leading term of zero");
        const Term* best = &terms_.front();
        for (auto& t : terms_)
            if (order.less(best->first, t.first)) best = &t;
        return *best;
    }

    const Monomial& leading_monomial(const GradedLexOrder& order) const {
        return leading_term(order).first;
    }

    bool is_monic(const GradedLexOrder& order) const {
        return !is_zero() && scalar_is_one(leading_term(order).second);
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    std::string str(const VariableTable& table) const {
        if (is_zero()) return "0";
        std::string s;
        for (auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += scalar_str(c) + "*" + m.str(table);
        }
        return s;
    }

private:
    Polynomial merged(const Polynomial& o, bool subtract) const {
        Polynomial r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        auto push = [&](const Monomial& m, C c) {
            if (!scalar_is_zero(c)) r.terms_.push_back({m, std::move(c)});
        };
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                push(a->first, a->second);
                ++a;
            } else if (a == terms_.end() || b->first < a->first) {
                push(b->first, subtract ? -b->second : b->second);
                ++b;
            } else {
                push(a->first, subtract ? C(a->second - b->second) : C(a->second + b->second));
                ++a, ++b;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

using IntPolynomial = Polynomial<Int>;
using RatPolynomial = Polynomial<Rat>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
    RatPolynomial r;
    for (auto& [m, c] : p.terms()) r += RatPolynomial::term(m, Rat(c));
    return r;
}

}  // namespace mkoszul

#endif
