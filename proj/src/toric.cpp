#include "mkoszul/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "mkoszul/rank_oracle.hpp"

namespace mkoszul {

Fan fan_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Fan fan;
    fan.dim = j.at("dim").get<int>();
    for (auto& ray : j.at("rays")) {
        std::vector<Int> v;
        for (auto& x : ray) v.push_back(Int(x.get<long>()));
        fan.rays.push_back(std::move(v));
    }
    for (auto& cone : j.at("cones")) {
        std::vector<int> c;
        for (auto& x : cone) c.push_back(x.get<int>() - 1);  // rays are 1-based in files
        std::sort(c.begin(), c.end());
        fan.cones.push_back(std::move(c));
    }
    return fan;
}

namespace {

/// Determinant by cofactor expansion; fans here are low-dimensional.
Int det_by_minors(const std::vector<std::vector<Int>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    Int acc = 0;
    for (int r = 0; r < n; ++r) {
        if (sgn(m[r][0]) == 0) continue;
        std::vector<std::vector<Int>> sub;
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<Int> row(m[i].begin() + 1, m[i].end());
            sub.push_back(std::move(row));
        }
        Int term = m[r][0] * det_by_minors(sub);
        acc += (r % 2) ? -term : term;
    }
    return acc;
}

}  // namespace

void validate_fan(const Fan& fan) {
    const int d = fan.dim;
    if (d < 1) throw std::runtime_error("fan dimension must be positive");
    if (fan.rays.empty() || fan.cones.empty()) throw std::runtime_error("fan needs rays and cones");
    for (auto& ray : fan.rays) {
        if (static_cast<int>(ray.size()) != d) throw std::runtime_error("ray dimension mismatch");
        Int g = 0;
        bool zero = true;
        for (auto& x : ray) {
            g = gcd(g, x);
            if (sgn(x) != 0) zero = false;
        }
        if (zero) throw std::runtime_error("zero ray vector");
        if (g != 1) throw std::runtime_error("ray vector is not primitive");
    }
    for (auto& cone : fan.cones) {
        if (static_cast<int>(cone.size()) != d)
            throw std::runtime_error("maximal cone is not full-dimensional simplicial");
        std::vector<std::vector<Int>> m;
        for (int r : cone) {
            if (r < 0 || r >= static_cast<int>(fan.rays.size()))
                throw std::runtime_error("cone references an unknown ray");
            m.push_back(fan.rays[r]);
        }
        Int det = det_by_minors(m);
        if (det != 1 && det != -1) {
            std::string cone_str;
            for (int r : cone) cone_str += (cone_str.empty() ? "" : ",") + std::to_string(r + 1);
            throw std::runtime_error("cone {" + cone_str + "} is not smooth: |det| = " +
                                     Int(abs(det)).get_str() + " (unimodular cones required)");
        }
    }
    // completeness surrogate: each facet in exactly two maximal cones and the
    // facet-adjacency graph connected
    std::map<std::vector<int>, std::vector<int>> facet_cones;
    for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
        const auto& cone = fan.cones[ci];
        for (int skip = 0; skip < d; ++skip) {
            std::vector<int> facet;
            for (int i = 0; i < d; ++i)
                if (i != skip) facet.push_back(cone[i]);
            facet_cones[facet].push_back(static_cast<int>(ci));
        }
    }
    for (auto& [facet, cones] : facet_cones)
        if (cones.size() != 2)
            throw std::runtime_error("fan is not complete: a facet lies in " +
                                     std::to_string(cones.size()) + " maximal cones");
    std::vector<int> seen(fan.cones.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (auto& [facet, cones] : facet_cones)
            for (int other : cones)
                if (!seen[other] && (cones[0] == c || cones[1] == c)) {
                    seen[other] = 1;
                    stack.push_back(other);
                }
    }
    for (int s : seen)
        if (!s) throw std::runtime_error("fan support is disconnected");
}

namespace {

std::set<std::vector<int>> face_set(const Fan& fan) {
    std::set<std::vector<int>> faces;
    faces.insert({});
    for (auto& cone : fan.cones) {
        const int d = static_cast<int>(cone.size());
        for (int mask = 1; mask < (1 << d); ++mask) {
            std::vector<int> f;
            for (int i = 0; i < d; ++i)
                if ((mask >> i) & 1) f.push_back(cone[i]);
            faces.insert(f);
        }
    }
    return faces;
}

}  // namespace

FlagVerdict is_flag(const Fan& fan) {
    validate_fan(fan);
    const int n = static_cast<int>(fan.rays.size());
    auto faces = face_set(fan);
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (faces.count({a, b})) edge[a][b] = edge[b][a] = true;

    // smallest clique that is not a face, by increasing size
    std::vector<int> clique;
    FlagVerdict verdict;
    std::function<bool(int, int)> search = [&](int from, int want) {
        if (static_cast<int>(clique.size()) == want) {
            if (!faces.count(clique)) {
                verdict.flag = false;
                for (int v : clique) verdict.witness.push_back(v + 1);
                return true;
            }
            return false;
        }
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int u : clique)
                if (!edge[u][v]) ok = false;
            if (!ok) continue;
            clique.push_back(v);
            if (search(v + 1, want)) return true;
            clique.pop_back();
        }
        return false;
    };
    for (int size = 3; size <= n; ++size) {
        clique.clear();
        if (search(0, size)) return verdict;
    }
    verdict.flag = true;
    return verdict;
}

namespace {

std::vector<std::vector<int>> minimal_nonfaces(const Fan& fan) {
    const int n = static_cast<int>(fan.rays.size());
    auto faces = face_set(fan);
    std::vector<std::vector<int>> nonfaces;
    // subsets all of whose proper subsets are faces but which are not faces;
    // enumerate by size so minimality is by construction
    for (int size = 1; size <= n; ++size) {
        std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& cur, int from) {
            if (static_cast<int>(cur.size()) == size) {
                // minimal <=> every proper subset obtained by dropping one
                // element is a face
                for (int i = 0; i < size; ++i) {
                    std::vector<int> sub;
                    for (int j = 0; j < size; ++j)
                        if (j != i) sub.push_back(cur[j]);
                    if (!faces.count(sub)) return;
                }
                if (!faces.count(cur)) nonfaces.push_back(cur);
                return;
            }
            for (int v = from; v < n; ++v) {
                cur.push_back(v);
                gen(cur, v + 1);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        gen(cur, 0);
    }
    return nonfaces;
}

std::vector<RatPolynomial> presentation_relations(const Fan& fan) {
    const int n = static_cast<int>(fan.rays.size());
    const int d = fan.dim;
    std::vector<RatPolynomial> rels;
    for (int j = 0; j < d; ++j) {
        RatPolynomial lin;
        for (int i = 0; i < n; ++i)
            if (sgn(fan.rays[i][j]) != 0) lin += RatPolynomial::variable(i, Rat(fan.rays[i][j]));
        rels.push_back(lin);
    }
    for (auto& nf : minimal_nonfaces(fan)) {
        Monomial m;
        for (int v : nf) m = m * Monomial::variable(v);
        rels.push_back(RatPolynomial::term(m, Rat(1)));
    }
    return rels;
}

}  // namespace

DanilovPresentation danilov_presentation(const Fan& fan) {
    validate_fan(fan);
    DanilovPresentation pres;
    pres.ray_count = static_cast<int>(fan.rays.size());
    for (int j = 0; j < fan.dim; ++j) {
        std::vector<Int> row;
        for (auto& ray : fan.rays) row.push_back(ray[j]);
        pres.linear.push_back(std::move(row));
    }
    pres.nonfaces = minimal_nonfaces(fan);
    pres.quadratic = true;
    for (auto& nf : pres.nonfaces)
        if (nf.size() != 2) pres.quadratic = false;
    auto rels = presentation_relations(fan);
    for (int deg = 0; deg <= fan.dim + 1; ++deg) {
        long qdim = graded_quotient_dim(rels, pres.ray_count, deg);
        if (deg > 0 && qdim == 0) break;
        pres.rank_vector.push_back(qdim);
    }
    return pres;
}

namespace {

struct Elimination {
    std::vector<int> kept;                       // surviving ray indices, input order
    std::vector<IntPolynomial> substitution;     // per original ray, over kept variables
};

/// Integer Gaussian elimination of the d linear relations with unit pivots;
/// smooth complete fans always admit them (each maximal cone is a lattice
/// basis).
Elimination eliminate_linear(const Fan& fan) {
    const int n = static_cast<int>(fan.rays.size());
    const int d = fan.dim;
    std::vector<std::vector<Int>> rows(d, std::vector<Int>(n));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < n; ++i) rows[j][i] = fan.rays[i][j];

    std::vector<int> pivot_col(d, -1);
    std::vector<bool> used(n, false);
    for (int j = 0; j < d; ++j) {
        int col = -1;
        for (int r = j; r < d && col < 0; ++r) {
            for (int c = 0; c < n; ++c)
                if (!used[c] && (rows[r][c] == 1 || rows[r][c] == -1)) {
                    std::swap(rows[j], rows[r]);
                    col = c;
                    break;
                }
        }
        if (col < 0) throw std::logic_error("no unit pivot available; smooth fan expected");
        if (rows[j][col] == -1)
            for (auto& x : rows[j]) x = -x;
        for (int r = 0; r < d; ++r) {
            if (r == j || sgn(rows[r][col]) == 0) continue;
            Int f = rows[r][col];
            for (int c = 0; c < n; ++c) rows[r][c] -= f * rows[j][c];
        }
        pivot_col[j] = col;
        used[col] = true;
    }

    Elimination elim;
    std::vector<int> kept_index(n, -1);
    for (int c = 0; c < n; ++c)
        if (!used[c]) {
            kept_index[c] = static_cast<int>(elim.kept.size());
            elim.kept.push_back(c);
        }
    elim.substitution.resize(n);
    for (int c = 0; c < n; ++c)
        if (kept_index[c] >= 0)
            elim.substitution[c] = IntPolynomial::variable(kept_index[c], Int(1));
    for (int j = 0; j < d; ++j) {
        IntPolynomial value;
        for (int c = 0; c < n; ++c) {
            if (c == pivot_col[j] || sgn(rows[j][c]) == 0) continue;
            if (kept_index[c] < 0) throw std::logic_error("pivot row touches another pivot column");
            value -= IntPolynomial::variable(kept_index[c], rows[j][c]);
        }
        elim.substitution[pivot_col[j]] = value;
    }
    return elim;
}

bool is_palindromic(const std::vector<long>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != v[v.size() - 1 - i]) return false;
    return !v.empty();
}

}  // namespace

ToricReport toric_koszul_check(const Fan& fan) {
    ToricReport report;
    auto verdict = is_flag(fan);  // validates
    report.flag = verdict.flag;
    report.witness = verdict.witness;
    auto nonfaces = minimal_nonfaces(fan);
    report.quadratic = true;
    for (auto& nf : nonfaces)
        if (nf.size() != 2) report.quadratic = false;

    if (!report.flag) {
        report.verdict = "not_koszul";
        return report;
    }

    Elimination elim = eliminate_linear(fan);
    report.kept_rays = elim.kept;
    const int vars = static_cast<int>(elim.kept.size());

    std::vector<IntPolynomial> quadrics;
    for (auto& nf : nonfaces) {
        IntPolynomial q = IntPolynomial::term(Monomial::one(), 1);
        for (int v : nf) q = q * elim.substitution[v];
        if (!q.is_zero()) quadrics.push_back(q);
    }

    GradedLexOrder order(vars);

    // Substituted quadrics share leading monomials; Gauss-reduce the integer
    // coefficient rows (columns in descending monomial order, so the echelon
    // pivots are the leading monomials) to a set with pairwise distinct leads
    // spanning the same lattice.
    std::vector<Monomial> deg2;
    for_each_monomial_of_degree(vars, 2, [&](const Monomial& m) { deg2.push_back(m); });
    std::sort(deg2.begin(), deg2.end(),
              [&](const Monomial& a, const Monomial& b) { return order.less(b, a); });
    std::map<Monomial, int> col_of;
    for (size_t i = 0; i < deg2.size(); ++i) col_of.emplace(deg2[i], static_cast<int>(i));
    IntegerEchelon ech;
    for (auto& q : quadrics) {
        SparseVecZ row;
        for (auto& [m, c] : q.terms()) row.push_back({col_of.at(m), c});
        std::sort(row.begin(), row.end());
        ech.insert(std::move(row));
    }
    quadrics.clear();
    report.gb_monic = true;
    for (auto& [pivot, row] : ech.rows()) {
        IntPolynomial p;
        for (auto& [col, c] : row) p += IntPolynomial::term(deg2[col], c);
        if (!p.is_monic(order)) report.gb_monic = false;
        quadrics.push_back(std::move(p));
    }

    std::vector<RatPolynomial> eliminated_rat;
    for (auto& q : quadrics) eliminated_rat.push_back(to_rational(q));
    for (int deg = 0; deg <= fan.dim + 1; ++deg) {
        long dim = graded_quotient_dim(eliminated_rat, vars, deg);
        report.oracle_dims.push_back(dim);
        if (deg > 0 && dim == 0) break;
    }

    if (report.gb_monic) {
        report.gb_attempted = true;
        GroebnerOptions opt;
        opt.normal_degree_cap = fan.dim + 2;
        std::vector<long> oracle = report.oracle_dims;
        if (oracle.empty() || oracle.back() != 0) oracle.push_back(0);
        opt.oracle_dims = oracle;
        auto cert = buchberger_verify(quadrics, order, opt);
        report.gb_verified = cert.verified;
        report.counting_match = cert.counting_checked && cert.counting_match;
    }

    // Order-free certificate along the structure of the cohomology ring: the
    // face ring has monomial quadratic relations (a Groebner basis for any
    // order), and the linear forms act as a regular sequence exactly when the
    // quotient dimensions match (1-t)^d times the face ring series; kernels
    // of the multiplication maps inflate the quotient degreewise, so the
    // exact identity over the full window is a certificate, not a heuristic.
    {
        const int n = static_cast<int>(fan.rays.size());
        const int d = fan.dim;
        std::vector<Monomial> sr_leads;
        std::vector<IntPolynomial> sr_polys;
        for (auto& nf : nonfaces) {
            Monomial m;
            for (int v : nf) m = m * Monomial::variable(v);
            sr_leads.push_back(m);
            sr_polys.push_back(IntPolynomial::term(m, 1));
        }
        GradedLexOrder full_order(n);
        auto face_cert = buchberger_verify(sr_polys, full_order);
        report.face_ring_gb_verified = face_cert.verified;

        const int window = 2 * d + 2;
        std::vector<long> face_dims;
        for (int k = 0; k <= window; ++k)
            face_dims.push_back(count_normal_monomials(sr_leads, k, n));
        std::vector<long> quotient = report.oracle_dims;
        while (static_cast<int>(quotient.size()) <= window) quotient.push_back(0);

        report.regular_sequence_match = true;
        std::vector<long> binom(d + 1);
        binom[0] = 1;
        for (int j = 1; j <= d; ++j) binom[j] = binom[j - 1] * (d - j + 1) / j;
        for (int k = 0; k <= window; ++k) {
            long rhs = 0;
            for (int j = 0; j <= d && j <= k; ++j)
                rhs += ((j % 2) ? -1 : 1) * binom[j] * face_dims[k - j];
            if (rhs != quotient[k]) report.regular_sequence_match = false;
        }
    }

    std::vector<long> trimmed = report.oracle_dims;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    report.hilbert = trimmed;
    report.palindromic = is_palindromic(trimmed);

    bool gb_route = report.gb_verified && report.counting_match;
    bool face_route = report.face_ring_gb_verified && report.regular_sequence_match;
    report.koszul_certified = report.flag && (gb_route || face_route);
    report.method = gb_route ? "quadratic_gb"
                             : (face_route ? "face_ring_regular_sequence" : "");
    report.verdict = report.koszul_certified ? "koszul" : "flag_uncertified";
    return report;
}

}  // namespace mkoszul
