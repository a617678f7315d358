#include "mkoszul/moduli.hpp"

#include <algorithm>

namespace mkoszul {

std::string relation_type_name(RelationType t) {
    switch (t) {
        case RelationType::t1a: return "1a";
        case RelationType::t1b: return "1b";
        case RelationType::t2: return "2";
        case RelationType::t3a: return "3a";
        case RelationType::t3b: return "3b";
        case RelationType::t4a: return "4a";
        case RelationType::t4b: return "4b";
    }
    return "?";
}

namespace {

/// Shortest initial interval of I containing T (T subset of I, T nonempty).
SubsetMask initial_hull(const SubsetMask& t, const SubsetMask& i) {
    SubsetMask u(i.ground_size());
    const int m = t.max();
    for (int e : i.members()) {
        if (e > m) break;
        u.insert(e);
    }
    return u;
}

}  // namespace

QuadraticClassification classify_quadratic_pair(const SubsetMask& s, const SubsetMask& t) {
    s.require_same_ground(t);
    if (s.size() < 3 || t.size() < 3)
        throw std::invalid_argument("classify_quadratic requires |S|,|T| >= 3");

    if (s == t) {
        return {false, s.size() == 3 ? RelationType::t1a : RelationType::t1b};
    }
    if (s.comparable_with(t)) {
        const SubsetMask& big = s.size() > t.size() ? s : t;
        const SubsetMask& small = s.size() > t.size() ? t : s;
        if (big.max() != small.max()) return {true, std::nullopt};
        if ((big - small).size() == 1) return {false, RelationType::t2};
        return {false, RelationType::t4a};
    }
    if (s.disjoint_from(t)) return {true, std::nullopt};
    // incomparable, intersecting
    if (s.max() == t.max()) return {false, RelationType::t3a};
    const SubsetMask& hi = s.max() > t.max() ? s : t;
    const SubsetMask& lo = s.max() > t.max() ? t : s;
    const SubsetMask i = hi | lo;
    if (!is_initial_interval(lo, i)) return {false, RelationType::t3b};
    MiStatus mi = mi_complement_status(hi, lo);
    if (mi == MiStatus::mi_essential) return {true, std::nullopt};
    if ((i - hi).size() == 1) return {false, RelationType::t4b};
    return {false, RelationType::t4a};
}

ModuliRing::ModuliRing(int n) : n_(n), order_(0) {
    if (n < 1 || n > 16) throw std::invalid_argument("moduli ring supports 1 <= n <= 16");
    if (n >= 3) {
        for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
            SubsetMask s(n, bits);
            if (s.size() >= 3) vars_.push_back(s);
        }
        std::sort(vars_.begin(), vars_.end(), canonical_less);
    }
    for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
        index_of_.emplace(vars_[i].bits(), i);
        table_.names.push_back("X" + vars_[i].str());
    }
    order_ = GradedLexOrder(static_cast<int>(vars_.size()));

    // raw generators of the defining ideal
    for (const auto& s : vars_) {
        if (s.size() == 3) {
            Monomial sq = Monomial::variable(var_index(s), 2);
            raw_.push_back(IntPolynomial::term(sq, 1));
        }
    }
    for (const auto& s : vars_) {
        if (s.size() > 3) {
            for (int e : s.members()) {
                // X_S (X_S - X_{S \ {e}})
                IntPolynomial rel = x(s) * (x(s) - x(s.without(e)));
                raw_.push_back(rel);
            }
        }
    }
    for (size_t a = 0; a < vars_.size(); ++a) {
        for (size_t b = a + 1; b < vars_.size(); ++b) {
            const SubsetMask& s = vars_[a];
            const SubsetMask& t = vars_[b];
            if (s.disjoint_from(t) || s.comparable_with(t)) continue;
            IntPolynomial xu = x(s | t);
            raw_.push_back((xu - x(s)) * (xu - x(t)));
        }
    }

    // reduced relations, one per non-normal quadratic monomial, emitted in
    // ascending leading-monomial order
    for (size_t b = 0; b < vars_.size(); ++b) {
        for (size_t a = 0; a <= b; ++a) {
            auto rel = build_reduced_relation(*this, vars_[a], vars_[b]);
            if (rel) reduced_.push_back(std::move(*rel));
        }
    }
    reduced_polys_.reserve(reduced_.size());
    std::vector<Monomial> leads;
    for (auto& r : reduced_) {
        reduced_polys_.push_back(r.poly);
        leads.push_back(r.poly.leading_monomial(order_));
    }
    lead_index_ = std::make_unique<LeadIndex>(std::move(leads));
}

int ModuliRing::var_index(const SubsetMask& s) const {
    auto it = index_of_.find(s.bits());
    if (it == index_of_.end() || s.ground_size() != n_)
        throw std::invalid_argument("not a generator of this ring: " + s.str());
    return it->second;
}

IntPolynomial ModuliRing::x(const SubsetMask& s) const {
    return IntPolynomial::variable(var_index(s), Int(1));
}

Monomial ModuliRing::quadratic_monomial(const SubsetMask& s, const SubsetMask& t) const {
    return Monomial::variable(var_index(s)) * Monomial::variable(var_index(t));
}

std::vector<IntPolynomial> ModuliRing::reduced_polynomials() const { return reduced_polys_; }

std::vector<Monomial> ModuliRing::leading_monomials() const {
    std::vector<Monomial> leads;
    leads.reserve(reduced_.size());
    for (auto& r : reduced_) leads.push_back(r.poly.leading_monomial(order_));
    return leads;
}

QuadraticClassification ModuliRing::classify_quadratic(const SubsetMask& s,
                                                       const SubsetMask& t) const {
    if (s.ground_size() != n_ || t.ground_size() != n_)
        throw std::invalid_argument("subset over a different ground set");
    return classify_quadratic_pair(s, t);
}

IntPolynomial ModuliRing::normal_form(const IntPolynomial& p) const {
    if (reduced_polys_.empty()) return p;
    return reduce(p, reduced_polys_, order_, *lead_index_);
}

std::optional<TaggedRelation> build_reduced_relation(const ModuliRing& ring, const SubsetMask& sa,
                                                     const SubsetMask& sb) {
    auto cls = classify_quadratic_pair(sa, sb);
    if (cls.normal) return std::nullopt;

    TaggedRelation rel;
    rel.type = *cls.blocked_by;
    auto X = [&](const SubsetMask& s) { return ring.x(s); };

    switch (rel.type) {
        case RelationType::t1a: {
            rel.S = sa;
            rel.poly = X(sa) * X(sa);
            break;
        }
        case RelationType::t1b: {
            rel.S = sa;
            rel.poly = X(sa) * X(sa) - X(boundary(sa)) * X(sa);
            break;
        }
        case RelationType::t2: {
            const SubsetMask& big = sa.size() > sb.size() ? sa : sb;
            const SubsetMask& small = sa.size() > sb.size() ? sb : sa;
            rel.S = big;
            rel.s = (big - small).min();
            rel.poly = X(small) * X(big) - X(big) * X(big);
            break;
        }
        case RelationType::t3a: {
            const SubsetMask& p = canonical_less(sa, sb) ? sa : sb;
            const SubsetMask& q = canonical_less(sa, sb) ? sb : sa;
            SubsetMask u = p | q;
            rel.S = p;
            rel.T = q;
            rel.poly = (X(p) - X(u)) * (X(q) - X(u));
            break;
        }
        case RelationType::t3b: {
            const SubsetMask& hi = sa.max() > sb.max() ? sa : sb;
            const SubsetMask& lo = sa.max() > sb.max() ? sb : sa;
            SubsetMask i = hi | lo;
            SubsetMask u = initial_hull(lo, i);
            rel.S = hi;
            rel.T = lo;
            rel.U = u;
            rel.poly = (X(i) - X(hi)) * (X(u) - X(lo));
            break;
        }
        case RelationType::t4a: {
            if (sa.comparable_with(sb)) {
                // X_small X_big with equal maxima and |big \ small| > 1:
                // the p = 1 element for (S = small, union = big).
                const SubsetMask& big = sa.size() > sb.size() ? sa : sb;
                const SubsetMask& small = sa.size() > sb.size() ? sb : sa;
                rel.S = small;
                rel.U = big;
                rel.p = 1;
                rel.poly = (X(small) - X(big)) * (X(big) - X(boundary(big)));
            } else {
                const SubsetMask& hi = sa.max() > sb.max() ? sa : sb;
                const SubsetMask& lo = sa.max() > sb.max() ? sb : sa;
                SubsetMask i = hi | lo;
                rel.S = hi;
                rel.U = i;
                rel.p = i.size() - lo.size() + 1;
                rel.poly = (X(hi) - X(i)) * (X(lo) - X(boundary(lo)));
            }
            break;
        }
        case RelationType::t4b: {
            const SubsetMask& hi = sa.max() > sb.max() ? sa : sb;
            const SubsetMask& lo = sa.max() > sb.max() ? sb : sa;
            SubsetMask i = hi | lo;
            rel.S = hi;
            rel.U = i;
            rel.p = i.size() - lo.size();
            rel.poly = (X(hi) - X(i)) * X(lo);
            break;
        }
    }
    return rel;
}

namespace {

/// Small fixed-capacity bitset over the generator indices.
struct VarSet {
    std::vector<uint64_t> w;
    explicit VarSet(int n) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    VarSet intersect(const VarSet& o) const {
        VarSet r(static_cast<int>(w.size()) * 64);
        r.w.resize(w.size());
        for (size_t k = 0; k < w.size(); ++k) r.w[k] = w[k] & o.w[k];
        return r;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
};

void count_cliques(const std::vector<VarSet>& adj, const VarSet& cands, int from, int depth,
                   int cap, std::vector<long>& counts) {
    if (depth >= cap) return;
    const int n = static_cast<int>(adj.size());
    for (int v = from; v < n; ++v) {
        if (!cands.test(v)) continue;
        counts[depth + 1]++;
        VarSet next = cands.intersect(adj[v]);
        if (next.any()) count_cliques(adj, next, v + 1, depth + 1, cap, counts);
    }
}

}  // namespace

std::vector<long> ModuliRing::hilbert_vector(int max_degree) const {
    const int v = static_cast<int>(vars_.size());
    // Normal monomials are square-free: every X_S^2 is a type 1a/1b leading
    // monomial. Degree-d counts are d-cliques of the normal-pair graph.
    for (const auto& s : vars_)
        if (classify_quadratic_pair(s, s).normal)
            throw std::logic_error("square classified normal; clique counting invalid");

    int cap = max_degree >= 0 ? max_degree : (v == 0 ? 0 : n_);
    std::vector<long> counts(cap + 1, 0);
    counts[0] = 1;
    if (v > 0 && cap >= 1) {
        std::vector<VarSet> adj(v, VarSet(v));
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                if (classify_quadratic_pair(vars_[a], vars_[b]).normal) {
                    adj[a].set(b);
                    adj[b].set(a);
                }
        VarSet all(v);
        for (int i = 0; i < v; ++i) all.set(i);
        count_cliques(adj, all, 0, 0, cap, counts);
    }
    if (max_degree < 0) {
        while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    }
    return counts;
}

// ---------------------------------------------------------------------------

namespace {

/// Moebius image of the class with representative rep inside the ring:
/// sum over supersets T of rep within {1..n} with |T| >= 3 of (-1)^{|T - rep|} X_T.
IntPolynomial moebius_image(const ModuliRing& ring, const SubsetMask& rep) {
    IntPolynomial img;
    const int n = ring.n();
    SubsetMask complement = SubsetMask::full(n) - rep;
    std::vector<int> free_elems = complement.members();
    const int f = static_cast<int>(free_elems.size());
    for (uint64_t bits = 0; bits < (uint64_t(1) << f); ++bits) {
        SubsetMask t = rep;
        int extra = 0;
        for (int k = 0; k < f; ++k)
            if ((bits >> k) & 1) {
                t.insert(free_elems[k]);
                ++extra;
            }
        if (t.size() < 3) continue;
        img += IntPolynomial::term(Monomial::variable(ring.var_index(t)), (extra % 2) ? Int(-1) : Int(1));
    }
    return img;
}

}  // namespace

ClassPresentation dcp_presentation(int n) {
    if (n < 3) throw std::invalid_argument("presentation requires n >= 3");
    ModuliRing ring(n);
    ClassPresentation pres;
    pres.n = n;
    std::unordered_map<uint64_t, int> index;
    for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
        SubsetMask s(n, bits);
        if (s.size() < 2) continue;
        index.emplace(bits, static_cast<int>(pres.generators.size()));
        pres.generators.push_back({s, moebius_image(ring, s)});
    }
    // linear: for every i < j, the classes containing both sum to zero
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            std::vector<std::pair<int, int>> combo;
            for (size_t g = 0; g < pres.generators.size(); ++g) {
                const SubsetMask& s = pres.generators[g].rep;
                if (s.contains(i) && s.contains(j)) combo.push_back({static_cast<int>(g), 1});
            }
            pres.linear_relations.push_back(std::move(combo));
        }
    }
    // monomial: incomparable intersecting pairs
    for (size_t a = 0; a < pres.generators.size(); ++a) {
        for (size_t b = a + 1; b < pres.generators.size(); ++b) {
            const SubsetMask& s = pres.generators[a].rep;
            const SubsetMask& t = pres.generators[b].rep;
            if (!s.disjoint_from(t) && !s.comparable_with(t))
                pres.monomial_relations.push_back({static_cast<int>(a), static_cast<int>(b)});
        }
    }
    return pres;
}

ClassPresentation keel_presentation(int n) {
    if (n < 3) throw std::invalid_argument("presentation requires n >= 3");
    ModuliRing ring(n);
    ClassPresentation pres;
    pres.n = n;
    // canonical representatives: subsets of {1..n} (avoiding n+1), 2 <= |S| <= n-1
    std::unordered_map<uint64_t, int> index;
    for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
        SubsetMask s(n, bits);
        if (s.size() < 2 || s.size() > n - 1) continue;
        index.emplace(bits, static_cast<int>(pres.generators.size()));
        pres.generators.push_back({s, moebius_image(ring, s)});
    }
    // the canonical representative of the class of S over the (n+1)-point
    // ground set: drop n+1 by complementing when present
    auto rep_index = [&](const SubsetMask& s_np1) {
        SubsetMask s = s_np1.contains(n + 1) ? SubsetMask::full(n + 1) - s_np1 : s_np1;
        SubsetMask over_n(n, s.bits());
        return index.at(over_n.bits());
    };

    // linear relations: for distinct i,j,k,l, the three pair splittings agree
    auto pair_sum = [&](int i, int j, int k, int l) {
        std::vector<int> coeff(pres.generators.size(), 0);
        for (uint64_t bits = 0; bits < (uint64_t(1) << (n + 1)); ++bits) {
            SubsetMask s(n + 1, bits);
            if (s.size() < 2 || s.size() > n - 1) continue;
            if (s.contains(i) && s.contains(j) && !s.contains(k) && !s.contains(l))
                coeff[rep_index(s)] += 1;
        }
        return coeff;
    };
    for (int a = 1; a <= n + 1; ++a)
        for (int b = a + 1; b <= n + 1; ++b)
            for (int c = b + 1; c <= n + 1; ++c)
                for (int d = c + 1; d <= n + 1; ++d) {
                    auto p1 = pair_sum(a, b, c, d);
                    auto p2 = pair_sum(a, c, b, d);
                    auto p3 = pair_sum(a, d, b, c);
                    for (auto* other : {&p2, &p3}) {
                        std::vector<std::pair<int, int>> combo;
                        for (size_t g = 0; g < p1.size(); ++g) {
                            int coeff = p1[g] - (*other)[g];
                            if (coeff != 0) combo.push_back({static_cast<int>(g), coeff});
                        }
                        pres.linear_relations.push_back(std::move(combo));
                    }
                }

    // monomial relations: D_S D_T = 0 unless some representatives are nested
    // or disjoint, i.e. unless one of S∩T, S∖T, T∖S, (S∪T)^c is empty over
    // the (n+1)-point ground set.
    for (size_t a = 0; a < pres.generators.size(); ++a) {
        for (size_t b = a + 1; b < pres.generators.size(); ++b) {
            SubsetMask s(n + 1, pres.generators[a].rep.bits());
            SubsetMask t(n + 1, pres.generators[b].rep.bits());
            SubsetMask full = SubsetMask::full(n + 1);
            bool vanishes = !(s & t).empty() && !(s - t).empty() && !(t - s).empty() &&
                            !(full - (s | t)).empty();
            if (vanishes) pres.monomial_relations.push_back({static_cast<int>(a), static_cast<int>(b)});
        }
    }
    return pres;
}

PresentationValidation validate_presentation(const ModuliRing& ring, const ClassPresentation& p) {
    PresentationValidation v;
    for (const auto& combo : p.linear_relations) {
        IntPolynomial rel;
        for (auto& [g, c] : combo) rel += p.generators[g].image.scaled_by(Monomial::one(), Int(c));
        ++v.linear_checked;
        if (!ring.normal_form(rel).is_zero()) v.all_reduce_to_zero = false;
    }
    for (auto& [a, b] : p.monomial_relations) {
        IntPolynomial rel = p.generators[a].image * p.generators[b].image;
        ++v.monomial_checked;
        if (!ring.normal_form(rel).is_zero()) v.all_reduce_to_zero = false;
    }
    return v;
}

NonvanishingReport nonvanishing_checks(const ModuliRing& ring) {
    const int n = ring.n();
    if (n < 3) throw std::invalid_argument("nonvanishing checks require n >= 3");
    NonvanishingReport report;
    report.n = n;

    for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
        SubsetMask s(n, bits);
        if (s.size() < 2 || s.size() > n - 1) continue;
        IntPolynomial img = moebius_image(ring, s);
        bool nonzero = !ring.normal_form(img * img).is_zero();
        report.divisor_squares.push_back({s, nonzero});
    }
    report.all_squares_nonzero = true;
    for (auto& sq : report.divisor_squares)
        if (!sq.nonzero) report.all_squares_nonzero = false;

    IntPolynomial top = ring.x(SubsetMask::full(n));
    IntPolynomial power = IntPolynomial::term(Monomial::one(), 1);
    report.top_powers_nonzero_below = true;
    for (int k = 1; k <= n - 1; ++k) {
        power = power * top;
        bool nonzero = !ring.normal_form(power).is_zero();
        report.top_powers.push_back({k, nonzero});
        if (k < n - 1 && !nonzero) report.top_powers_nonzero_below = false;
    }
    return report;
}

}  // namespace mkoszul
