#ifndef MKOSZUL_MONOMIAL_HPP
#define MKOSZUL_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkoszul {

/// Ordered list of variable identifiers. The position in the list is the
/// variable index used everywhere else; later positions are the larger
/// variables of the graded-lex order.
struct VariableTable {
    std::vector<std::string> names;
    int size() const { return static_cast<int>(names.size()); }
};

/// Commutative monomial as a sparse exponent list, sorted by variable index,
/// zero exponents never stored. Total degree is cached.
class Monomial {
public:
    using Exps = std::vector<std::pair<int32_t, int32_t>>;

    Monomial() : degree_(0) {}

    static Monomial one() { return Monomial(); }

    static Monomial variable(int v, int e = 1) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        Monomial m;
        if (e > 0) {
            m.exps_.push_back({v, e});
            m.degree_ = e;
        }
        return m;
    }

    static Monomial from_exponents(Exps exps) {
        std::sort(exps.begin(), exps.end());
        Monomial m;
        for (auto& [v, e] : exps) {
            if (e < 0) throw std::invalid_argument("negative exponent");
            if (e == 0) continue;
            if (!m.exps_.empty() && m.exps_.back().first == v)
                m.exps_.back().second += e;
            else
                m.exps_.push_back({v, e});
            m.degree_ += e;
        }
        return m;
    }

    const Exps& exponents() const { return exps_; }
    int degree() const { return degree_; }
    bool is_one() const { return exps_.empty(); }

    int exponent(int v) const {
        for (auto& [w, e] : exps_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.exps_.reserve(exps_.size() + o.exps_.size());
        auto a = exps_.begin(), b = o.exps_.begin();
        while (a != exps_.end() || b != o.exps_.end()) {
            if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first))
                r.exps_.push_back(*a++);
            else if (a == exps_.end() || b->first < a->first)
                r.exps_.push_back(*b++);
            else {
                r.exps_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    bool divides(const Monomial& o) const {
        auto a = exps_.begin();
        auto b = o.exps_.begin();
        while (a != exps_.end()) {
            while (b != o.exps_.end() && b->first < a->first) ++b;
            if (b == o.exps_.end() || b->first != a->first || b->second < a->second) return false;
            ++a;
        }
        return true;
    }

    /// o / *this, assuming divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r;
        auto a = exps_.begin();
        for (auto& [v, e] : o.exps_) {
            int sub = 0;
            while (a != exps_.end() && a->first < v) ++a;
            if (a != exps_.end() && a->first == v) sub = a->second;
            if (e - sub < 0) throw std::invalid_argument("non-divisible quotient");
            if (e - sub > 0) {
                r.exps_.push_back({v, e - sub});
                r.degree_ += e - sub;
            }
        }
        return r;
    }

    static Monomial lcm(const Monomial& x, const Monomial& y) {
        Monomial r;
        auto a = x.exps_.begin(), b = y.exps_.begin();
        while (a != x.exps_.end() || b != y.exps_.end()) {
            if (b == y.exps_.end() || (a != x.exps_.end() && a->first < b->first))
                r.exps_.push_back(*a++);
            else if (a == x.exps_.end() || b->first < a->first)
                r.exps_.push_back(*b++);
            else {
                r.exps_.push_back({a->first, std::max(a->second, b->second)});
                ++a, ++b;
            }
        }
        for (auto& [v, e] : r.exps_) r.degree_ += e;
        return r;
    }

    /// Structural ordering used for canonical term storage; unrelated to the
    /// admissible monomial order.
    std::strong_ordering operator<=>(const Monomial& o) const {
        if (auto c = degree_ <=> o.degree_; c != 0) return c;
        return std::lexicographical_compare_three_way(
            exps_.begin(), exps_.end(), o.exps_.begin(), o.exps_.end());
    }
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    /// Distinct variable indices with exponent >= 1.
    std::vector<int> support() const {
        std::vector<int> s;
        s.reserve(exps_.size());
        for (auto& [v, e] : exps_) s.push_back(v);
        return s;
    }

    std::string str(const VariableTable& table) const {
        if (is_one()) return "1";
        std::string s;
        for (auto& [v, e] : exps_) {
            if (!s.empty()) s += "*";
            s += table.names.at(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    size_t hash() const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (auto& [v, e] : exps_) {
            h ^= (size_t(v) * 0x100000001b3ull) + size_t(e) + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    Exps exps_;
    int degree_;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded lexicographic order over a variable table: degree first, ties broken
/// scanning variables from the greatest table position down; at the first
/// variable where the exponents differ, the larger exponent wins.
class GradedLexOrder {
public:
    explicit GradedLexOrder(int var_count) : var_count_(var_count) {}

    int var_count() const { return var_count_; }

    std::strong_ordering compare(const Monomial& u, const Monomial& v) const {
        check(u);
        check(v);
        if (auto c = u.degree() <=> v.degree(); c != 0) return c;
        const auto& a = u.exponents();
        const auto& b = v.exponents();
        auto i = a.rbegin();
        auto j = b.rbegin();
        while (i != a.rend() && j != b.rend()) {
            if (i->first != j->first) return i->first <=> j->first;
            if (i->second != j->second) return i->second <=> j->second;
            ++i, ++j;
        }
        if (i != a.rend()) return std::strong_ordering::greater;
        if (j != b.rend()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    bool less(const Monomial& u, const Monomial& v) const {
        return compare(u, v) == std::strong_ordering::less;
    }

private:
    void check(const Monomial& m) const {
        if (!m.exponents().empty() && m.exponents().back().first >= var_count_)
            throw std::invalid_argument("monomial uses a variable outside the table");
    }
    int var_count_;
};

/// All monomials of the given degree over var_count variables, as sorted
/// nondecreasing index tuples, enumerated in lexicographic tuple order.
void for_each_monomial_of_degree(int var_count, int degree,
                                 const std::function<void(const Monomial&)>& fn);

}  // namespace mkoszul

#endif
