#include "mkoszul/duality.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace mkoszul {

namespace {

SparseVecZ pair_vector(const PairBasis& pb, const IntPolynomial& p) {
    SparseVecZ v;
    for (auto& [m, c] : p.terms()) {
        const auto& e = m.exponents();
        int id;
        if (e.size() == 1) {
            if (e[0].second != 2) throw std::invalid_argument("not a quadratic monomial");
            id = pb.id(e[0].first, e[0].first);
        } else {
            id = pb.id(e[0].first, e[1].first);
        }
        v.push_back({id, c});
    }
    std::sort(v.begin(), v.end());
    return v;
}

Int dot(const SparseVecZ& a, const SparseVecZ& b) {
    Int d = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            d += i->second * j->second;
            ++i, ++j;
        }
    }
    return d;
}

SparseVecQ to_rat_vec(const SparseVecZ& v) {
    SparseVecQ r;
    r.reserve(v.size());
    for (auto& [c, x] : v) r.push_back({c, Rat(x)});
    return r;
}

}  // namespace

std::vector<LieRelation> lie_relations(const ModuliRing& ring) {
    const int n = ring.n();
    if (n < 3) return {};
    PairBasis pb{ring.table().size()};
    const auto& vars = ring.variables();
    std::vector<LieRelation> out;

    // family 1: disjoint generator pairs
    for (size_t a = 0; a < vars.size(); ++a)
        for (size_t b = a + 1; b < vars.size(); ++b)
            if (vars[a].disjoint_from(vars[b])) {
                LieRelation r;
                r.family = LieFamily::disjoint_pair;
                r.S = vars[a];
                r.T = vars[b];
                r.vec = {{pb.id(static_cast<int>(a), static_cast<int>(b)), Int(1)}};
                out.push_back(std::move(r));
            }

    // family 2: for |S| > 3, the sum over intersecting covers {T1,T2} of S;
    // the degenerate cover {S,S} contributes the square Y_S Y_S with
    // coefficient 1, the normalization that annihilates X_S(X_S - X_{S\s})
    for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
        SubsetMask s(n, bits);
        if (s.size() <= 3) continue;
        std::map<int, Int> coeffs;
        std::vector<int> elems = s.members();
        const int k = static_cast<int>(elems.size());
        long total = 1;
        for (int i = 0; i < k; ++i) total *= 3;
        for (long code = 0; code < total; ++code) {
            long c = code;
            SubsetMask t1(n), t2(n);
            for (int i = 0; i < k; ++i) {
                int st = c % 3;
                c /= 3;
                if (st == 0 || st == 2) t1.insert(elems[i]);
                if (st == 1 || st == 2) t2.insert(elems[i]);
            }
            if (t1.size() < 3 || t2.size() < 3) continue;
            if (t1.disjoint_from(t2)) continue;
            int id = pb.id(ring.var_index(t1), ring.var_index(t2));
            coeffs[id] += 1;  // unordered pairs counted twice, diagonal once
        }
        LieRelation r;
        r.family = LieFamily::cover_sum;
        r.S = s;
        int diag = pb.id(ring.var_index(s), ring.var_index(s));
        for (auto& [id, c] : coeffs) {
            Int value = (id == diag) ? c : c / 2;
            r.vec.push_back({id, value});
        }
        out.push_back(std::move(r));
    }

    // family 3: [Y_T, sum_{T u K = S} Y_K] for T proper in S with |S \ T| > 1
    for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
        SubsetMask s(n, bits);
        if (s.size() < 5) continue;  // |T| >= 3 and |S\T| > 1 force |S| >= 5
        for (uint64_t tb = 0; tb < (uint64_t(1) << n); ++tb) {
            SubsetMask t(n, tb);
            if (t.size() < 3 || !t.subset_of(s) || (s - t).size() <= 1) continue;
            LieRelation r;
            r.family = LieFamily::interval_bracket;
            r.S = s;
            r.T = t;
            std::map<int, Int> coeffs;
            SubsetMask rest = s - t;
            std::vector<int> opt = t.members();
            const int k = static_cast<int>(opt.size());
            for (uint64_t jb = 0; jb < (uint64_t(1) << k); ++jb) {
                SubsetMask kk = rest;
                for (int i = 0; i < k; ++i)
                    if ((jb >> i) & 1) kk.insert(opt[i]);
                if (kk.size() < 3) continue;
                coeffs[pb.id(ring.var_index(t), ring.var_index(kk))] += 1;
            }
            for (auto& [id, c] : coeffs) r.vec.push_back({id, c});
            out.push_back(std::move(r));
        }
    }
    return out;
}

DualCheckReport verify_dual_presentation(const ModuliRing& ring) {
    DualCheckReport rep;
    rep.n = ring.n();
    PairBasis pb{ring.table().size()};
    auto lies = lie_relations(ring);
    rep.relation_count = static_cast<long>(lies.size());
    for (auto& l : lies) {
        if (l.family == LieFamily::disjoint_pair) rep.disjoint_count++;
        if (l.family == LieFamily::cover_sum) rep.cover_count++;
        if (l.family == LieFamily::interval_bracket) rep.interval_count++;
    }

    std::vector<SparseVecZ> raw_vecs;
    for (auto& r : ring.raw_relations()) raw_vecs.push_back(pair_vector(pb, r));

    rep.orthogonal = true;
    for (size_t i = 0; i < lies.size() && rep.orthogonal; ++i)
        for (size_t j = 0; j < raw_vecs.size(); ++j)
            if (sgn(dot(lies[i].vec, raw_vecs[j])) != 0) {
                rep.orthogonal = false;
                rep.first_failing_pairing = {static_cast<int>(i), static_cast<int>(j)};
                break;
            }

    RationalEchelon lie_ech;
    long lie_rank = 0;
    for (auto& l : lies)
        if (lie_ech.insert(to_rat_vec(l.vec))) ++lie_rank;
    rep.independent = (lie_rank == rep.relation_count);

    RationalEchelon raw_ech;
    for (auto& v : raw_vecs) raw_ech.insert(to_rat_vec(v));
    rep.annihilator_dim = pb.size() - raw_ech.rank();
    rep.count_matches = (rep.relation_count == rep.annihilator_dim);
    rep.pass = rep.orthogonal && rep.independent && rep.count_matches;
    return rep;
}

QuadraticPresentation ring_presentation(const ModuliRing& ring) {
    QuadraticPresentation p;
    p.kind = QuadraticPresentation::Kind::commutative;
    p.generators = ring.table().size();
    p.odd_generators = false;
    PairBasis pb{p.generators};
    for (auto& r : ring.raw_relations()) p.relations.push_back(to_rat_vec(pair_vector(pb, r)));
    return p;
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& p) {
    QuadraticPresentation dual;
    dual.kind = p.kind == QuadraticPresentation::Kind::commutative
                    ? QuadraticPresentation::Kind::graded_commutative
                    : QuadraticPresentation::Kind::commutative;
    dual.generators = p.generators;
    dual.odd_generators = !p.odd_generators;
    PairBasis pb{p.generators};
    dual.relations = nullspace_basis(p.relations, static_cast<int>(pb.size()));
    return dual;
}

// ---------------------------------------------------------------------------
// power series over Q

PowerSeries series_product(const PowerSeries& a, const PowerSeries& b, int order) {
    PowerSeries r;
    r.c.assign(order + 1, Rat(0));
    for (int i = 0; i <= order && i < static_cast<int>(a.c.size()); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.c.size()); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

PowerSeries poincare_series(const ModuliRing& ring, int order) {
    PowerSeries f;
    f.c.assign(order + 1, Rat(0));
    auto h = ring.hilbert_vector();
    for (int d = 0; d < static_cast<int>(h.size()) && d <= order; ++d) f.c[d] = Rat(h[d]);
    return f;
}

PowerSeries series_inverse(const PowerSeries& f) {
    if (f.c.empty() || f.c[0] != 1) throw std::invalid_argument("series_inverse requires f(0) = 1");
    const int order = f.order();
    PowerSeries g;
    g.c.assign(order + 1, Rat(0));
    g.c[0] = 1;
    // F(t) = f(-t); solve F * g = 1 term by term
    auto F = [&](int k) { return (k % 2) ? Rat(-f.c[k]) : f.c[k]; };
    for (int k = 1; k <= order; ++k) {
        Rat acc(0);
        for (int i = 1; i <= k; ++i) acc += F(i) * g.c[k - i];
        g.c[k] = -acc;
    }
    return g;
}

namespace {

PowerSeries series_log(const PowerSeries& f, int order) {
    if (f.c.empty() || f.c[0] != 1) throw std::invalid_argument("series_log requires f(0) = 1");
    PowerSeries u;  // f - 1
    u.c.assign(order + 1, Rat(0));
    for (int k = 1; k <= order && k < static_cast<int>(f.c.size()); ++k) u.c[k] = f.c[k];
    PowerSeries result;
    result.c.assign(order + 1, Rat(0));
    PowerSeries power;
    power.c.assign(order + 1, Rat(0));
    power.c[0] = 1;
    for (int k = 1; k <= order; ++k) {
        power = series_product(power, u, order);
        Rat sign = (k % 2) ? Rat(1) : Rat(-1);
        for (int d = 0; d <= order; ++d) result.c[d] += sign * power.c[d] / k;
    }
    return result;
}

std::vector<int> moebius_table(int upto) {
    std::vector<int> mu(upto + 1, 1);
    std::vector<bool> composite(upto + 1, false);
    std::vector<int> primes;
    for (int i = 2; i <= upto; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (int p : primes) {
            if (int64_t(i) * p > upto) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

}  // namespace

PowerSeries homotopy_rank_series(const ModuliRing& ring, int order) {
    if (order > 24) throw std::invalid_argument("homotopy_rank_series supports order <= 24");
    PowerSeries f = poincare_series(ring, order);
    PowerSeries logf = series_log(f, order);
    PowerSeries out;
    out.c.assign(order + 1, Rat(0));
    auto mu = moebius_table(std::max(order, 1));
    for (int m = 1; m <= order; ++m) {
        if (mu[m] == 0) continue;
        // -mu(m)/m * log f((-t)^m)
        for (int k = 1; m * k <= order; ++k) {
            Rat term = logf.c[k] * Rat(mu[m], m);
            if ((m * k) % 2) term = -term;  // (-t)^{mk}
            out.c[m * k] -= term;
        }
    }
    for (int k = 1; k <= order; ++k) {
        if (out.c[k].get_den() != 1 || sgn(out.c[k]) < 0)
            throw std::runtime_error("homotopy rank series produced a non-integer or negative rank");
    }
    return out;
}

PowerSeries pbw_reconstruction(const std::vector<long>& ranks, int order) {
    PowerSeries result;
    result.c.assign(order + 1, Rat(0));
    result.c[0] = 1;
    for (int k = 1; k <= order && k < static_cast<int>(ranks.size()); ++k) {
        if (ranks[k] == 0) continue;
        PowerSeries factor;
        factor.c.assign(order + 1, Rat(0));
        if (k % 2) {
            // (1 + t^k)^{r}
            factor.c[0] = 1;
            Rat binom(1);
            for (int j = 1; j * k <= order && j <= ranks[k]; ++j) {
                binom = binom * Rat(ranks[k] - j + 1) / j;
                factor.c[j * k] = binom;
            }
        } else {
            // (1 - t^k)^{-r}: coefficients C(r+j-1, j)
            factor.c[0] = 1;
            Rat binom(1);
            for (int j = 1; j * k <= order; ++j) {
                binom = binom * Rat(ranks[k] + j - 1) / j;
                factor.c[j * k] = binom;
            }
        }
        result = series_product(result, factor, order);
    }
    return result;
}

// ---------------------------------------------------------------------------
// dual algebra dimensions: iterated quotient of V (x) A_{d-1}

namespace {

struct TensorRelation {
    std::vector<std::tuple<int, int, Rat>> terms;  // (first letter, second letter, coeff)
};

std::vector<TensorRelation> tensorize(const ModuliRing& ring) {
    std::vector<TensorRelation> out;
    for (auto& lie : lie_relations(ring)) {
        TensorRelation tr;
        for (auto& [id, c] : lie.vec) {
            // invert id = j(j+1)/2 + i
            int j = static_cast<int>((std::sqrt(8.0 * id + 1) - 1) / 2);
            while (j * (j + 1) / 2 > id) --j;
            while ((j + 1) * (j + 2) / 2 <= id) ++j;
            int i = id - j * (j + 1) / 2;
            // diagonal pair coordinates are squares Y_i Y_i, not full brackets:
            // the canonical pairing against symmetrized primal lifts then
            // reduces to the Kronecker pairing on pair coordinates
            if (i == j) {
                tr.terms.push_back({i, i, Rat(c)});
            } else {
                tr.terms.push_back({i, j, Rat(c)});
                tr.terms.push_back({j, i, Rat(c)});
            }
        }
        out.push_back(std::move(tr));
    }
    return out;
}

}  // namespace

PowerSeries dual_hilbert(const ModuliRing& ring, int order) {
    const int g = ring.table().size();
    PowerSeries dims;
    dims.c.assign(order + 1, Rat(0));
    dims.c[0] = 1;
    if (order == 0) return dims;
    if (g == 0) return dims;
    dims.c[std::min(1, order)] = g;

    auto rels = tensorize(ring);

    // state for degree d-1: number of basis classes, pivot expansions over
    // basis positions, and position of each non-pivot coordinate
    long prev_count = 1;                                // |N_{d-2}| at loop entry
    long cur_count = g;                                 // |N_{d-1}|
    std::map<long, SparseVecQ> cur_pivots;              // coord -> expansion over N_{d-1}
    std::vector<long> cur_pos(g);                       // coord -> position in N_{d-1}
    std::iota(cur_pos.begin(), cur_pos.end(), 0);

    for (int d = 2; d <= order; ++d) {
        const long ncols = g * cur_count;
        RationalEchelon ech;
        for (auto& rel : rels) {
            for (long mu = 0; mu < prev_count; ++mu) {
                // row = sum of coeff * (a (x) L_b(mu))
                std::map<long, Rat> entries;
                for (auto& [a, b, coeff] : rel.terms) {
                    long coord = long(b) * prev_count + mu;
                    auto pivot = cur_pivots.find(coord);
                    if (pivot == cur_pivots.end()) {
                        long col = long(a) * cur_count + cur_pos[coord];
                        entries[col] += coeff;
                    } else {
                        for (auto& [pos, val] : pivot->second)
                            entries[long(a) * cur_count + pos] += coeff * val;
                    }
                }
                SparseVecQ row;
                for (auto& [col, val] : entries)
                    if (sgn(val) != 0) row.push_back({static_cast<int>(col), val});
                if (!row.empty()) ech.insert(std::move(row));
            }
        }
        long next_count = ncols - ech.rank();
        dims.c[d] = next_count;

        if (d == order) break;
        ech.back_substitute();  // rewrite tables are only needed for the next degree

        // positions of non-pivot coordinates, then pivot expansions
        std::vector<long> next_pos(ncols, -1);
        {
            long pos = 0;
            auto it = ech.rows().begin();
            for (long coord = 0; coord < ncols; ++coord) {
                while (it != ech.rows().end() && it->first < coord) ++it;
                bool is_pivot = (it != ech.rows().end() && it->first == coord);
                if (!is_pivot) next_pos[coord] = pos++;
            }
        }
        std::map<long, SparseVecQ> next_pivots;
        for (auto& [pivot_col, row] : ech.rows()) {
            SparseVecQ expansion;
            for (size_t k = 1; k < row.size(); ++k)
                expansion.push_back({static_cast<int>(next_pos[row[k].first]), -row[k].second});
            std::sort(expansion.begin(), expansion.end());
            next_pivots.emplace(pivot_col, std::move(expansion));
        }
        prev_count = cur_count;
        cur_count = next_count;
        cur_pivots = std::move(next_pivots);
        cur_pos = std::move(next_pos);
    }
    return dims;
}

// ---------------------------------------------------------------------------
// commutator quotient over F_ell via cyclic words with signs

namespace {

struct CyclicClasses {
    long alive = 0;
    std::vector<int32_t> cls;  // word id -> class id, -1 when the class dies
    std::vector<int8_t> sign;
};

CyclicClasses build_classes(int g, int d, long nwords) {
    CyclicClasses cc;
    cc.cls.assign(nwords, -2);  // -2: unvisited
    cc.sign.assign(nwords, 1);
    std::vector<long> powers(d);
    powers[0] = 1;
    for (int i = 1; i < d; ++i) powers[i] = powers[i - 1] * g;
    const int rot_sign = (d % 2 == 0) ? -1 : 1;  // moving the last letter to the front

    std::vector<long> orbit;
    std::vector<int> osign;
    for (long w = 0; w < nwords; ++w) {
        if (cc.cls[w] != -2) continue;
        orbit.clear();
        osign.clear();
        long cur = w;
        int s = 1;
        bool dead = false;
        do {
            orbit.push_back(cur);
            osign.push_back(s);
            long last = cur / powers[d - 1];
            cur = last + (cur - last * powers[d - 1]) * g;
            s *= rot_sign;
        } while (cur != w);
        if (s == -1) dead = true;  // full cycle returns with a sign flip
        // a repeated word inside the orbit with differing signs also kills it
        for (size_t i = 0; i < orbit.size() && !dead; ++i)
            for (size_t j = i + 1; j < orbit.size(); ++j)
                if (orbit[i] == orbit[j] && osign[i] != osign[j]) {
                    dead = true;
                    break;
                }
        if (dead) {
            for (long id : orbit) cc.cls[id] = -1;
            continue;
        }
        // canonical representative: smallest word id, sign relative to it
        size_t best = 0;
        for (size_t i = 1; i < orbit.size(); ++i)
            if (orbit[i] < orbit[best]) best = i;
        int32_t class_id = static_cast<int32_t>(cc.alive++);
        for (size_t i = 0; i < orbit.size(); ++i) {
            cc.cls[orbit[i]] = class_id;
            cc.sign[orbit[i]] = static_cast<int8_t>(osign[i] * osign[best]);
        }
    }
    return cc;
}

std::vector<std::vector<std::tuple<int, int, int64_t>>> tensorize_mod(const ModuliRing& ring,
                                                                      int64_t ell) {
    std::vector<std::vector<std::tuple<int, int, int64_t>>> rels;
    for (auto& tr : lie_relations(ring)) {
        std::vector<std::tuple<int, int, int64_t>> terms;
        for (auto& [id, c] : tr.vec) {
            int j = 0;
            while ((j + 1) * (j + 2) / 2 <= id) ++j;
            int i = id - j * (j + 1) / 2;
            int64_t cv = c.get_si() % ell;
            if (i == j) {
                terms.push_back({i, i, cv});
            } else {
                terms.push_back({i, j, cv});
                terms.push_back({j, i, cv});
            }
        }
        rels.push_back(std::move(terms));
    }
    return rels;
}

}  // namespace

std::vector<long> commutator_quotient_dims(const ModuliRing& ring, int64_t ell, int max_degree,
                                           const Hh0Options& options) {
    if (max_degree < 0) throw std::invalid_argument("negative degree");
    Fp probe(1, ell);  // validates the modulus
    const int g = ring.table().size();
    std::vector<long> dims;
    dims.push_back(1);
    if (max_degree == 0) return dims;
    dims.push_back(g);
    if (g == 0) {
        while (static_cast<int>(dims.size()) <= max_degree) dims.push_back(0);
        return dims;
    }
    auto rels = tensorize_mod(ring, ell);

    for (int d = 2; d <= max_degree; ++d) {
        long nwords = 1;
        for (int i = 0; i < d; ++i) {
            nwords *= g;
            if (nwords > options.word_cap) throw std::runtime_error("hh0: word count exceeds cap");
        }
        CyclicClasses cc = build_classes(g, d, nwords);

        long ntails = nwords / g / g;  // g^{d-2}
        FpEchelon ech(ell);
        for (auto& rel : rels) {
            for (long w = 0; w < ntails; ++w) {
                std::map<int32_t, int64_t> entries;
                for (auto& [a, b, c] : rel) {
                    long id = a + long(b) * g + w * g * g;
                    if (cc.cls[id] < 0) continue;
                    entries[cc.cls[id]] = (entries[cc.cls[id]] + c * cc.sign[id]) % ell;
                }
                SparseVecP row;
                for (auto& [cls, val] : entries) {
                    int64_t v = val % ell;
                    if (v < 0) v += ell;
                    if (v) row.push_back({cls, v});
                }
                if (!row.empty()) ech.insert(std::move(row));
            }
        }
        dims.push_back(cc.alive - ech.rank());
    }
    return dims;
}

std::vector<long> commutator_quotient_dims_brute(const ModuliRing& ring, int64_t ell,
                                                 int max_degree, const Hh0Options& options) {
    Fp probe(1, ell);
    const int g = ring.table().size();
    std::vector<long> dims;
    dims.push_back(1);
    if (max_degree == 0) return dims;
    dims.push_back(g);
    if (g == 0) {
        while (static_cast<int>(dims.size()) <= max_degree) dims.push_back(0);
        return dims;
    }
    auto rels = tensorize_mod(ring, ell);

    for (int d = 2; d <= max_degree; ++d) {
        long nwords = 1;
        for (int i = 0; i < d; ++i) {
            nwords *= g;
            if (nwords > options.word_cap) throw std::runtime_error("hh0: word count exceeds cap");
        }
        std::vector<long> powers(d + 1);
        powers[0] = 1;
        for (int i = 1; i <= d; ++i) powers[i] = powers[i - 1] * g;

        FpEchelon ech(ell);
        // two-sided ideal rows at every position
        for (int pos = 0; pos + 2 <= d; ++pos) {
            long left = powers[pos];
            long right = powers[d - pos - 2];
            for (auto& rel : rels) {
                for (long u = 0; u < left; ++u) {
                    for (long v = 0; v < right; ++v) {
                        std::map<long, int64_t> entries;
                        for (auto& [a, b, c] : rel) {
                            long id = u + a * powers[pos] + b * powers[pos + 1] +
                                      v * powers[pos + 2];
                            entries[id] = (entries[id] + c) % ell;
                        }
                        SparseVecP row;
                        for (auto& [col, val] : entries) {
                            int64_t vv = val % ell;
                            if (vv < 0) vv += ell;
                            if (vv) row.push_back({static_cast<int>(col), vv});
                        }
                        if (!row.empty()) ech.insert(std::move(row));
                    }
                }
            }
        }
        // graded commutator rows uv - (-1)^{|u||v|} vu
        for (int i = 1; i < d; ++i) {
            long left = powers[i];
            long right = powers[d - i];
            int64_t s = ((long(i) * (d - i)) % 2) ? ell - 1 : 1;
            for (long u = 0; u < left; ++u) {
                for (long v = 0; v < right; ++v) {
                    long uv = u + v * powers[i];
                    long vu = v + u * powers[d - i];
                    std::map<long, int64_t> entries;
                    entries[uv] = (entries[uv] + 1) % ell;
                    entries[vu] = (entries[vu] + ell - s) % ell;
                    SparseVecP row;
                    for (auto& [col, val] : entries)
                        if (val % ell) row.push_back({static_cast<int>(col), val % ell});
                    if (!row.empty()) ech.insert(std::move(row));
                }
            }
        }
        dims.push_back(nwords - ech.rank());
    }
    return dims;
}

}  // namespace mkoszul
