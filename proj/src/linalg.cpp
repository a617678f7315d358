#include "mkoszul/linalg.hpp"

#include <stdexcept>

namespace mkoszul {

SparseVecQ sparse_axpy(const SparseVecQ& x, const Rat& a, const SparseVecQ& y) {
    SparseVecQ r;
    r.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            r.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
            Rat c = a * j->second;
            if (sgn(c) != 0) r.push_back({j->first, std::move(c)});
            ++j;
        } else {
            Rat c = i->second + a * j->second;
            if (sgn(c) != 0) r.push_back({i->first, std::move(c)});
            ++i, ++j;
        }
    }
    return r;
}

SparseVecQ RationalEchelon::residual(SparseVecQ row) const {
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end()) break;
        row = sparse_axpy(row, -row.front().second, it->second);
    }
    return row;
}

bool RationalEchelon::insert(SparseVecQ row) {
    row = residual(std::move(row));
    if (row.empty()) return false;
    Rat inv = 1 / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    int pivot = row.front().first;
    rows_.emplace(pivot, std::move(row));
    return true;
}

void RationalEchelon::back_substitute() {
    // Descending pivot order: a row's tail only mentions columns above its own
    // pivot, so later (larger) pivots are already pure when used.
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SparseVecQ& row = it->second;
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t k = 1; k < row.size(); ++k) {
                auto p = rows_.find(row[k].first);
                if (p != rows_.end()) {
                    row = sparse_axpy(row, -row[k].second, p->second);
                    dirty = true;
                    break;
                }
            }
        }
    }
}

long rank_of(const std::vector<SparseVecQ>& rows) {
    RationalEchelon ech;
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

std::vector<SparseVecQ> nullspace_basis(const std::vector<SparseVecQ>& rows, int ncols) {
    RationalEchelon ech;
    for (const auto& r : rows) ech.insert(r);
    ech.back_substitute();

    std::vector<bool> is_pivot(ncols, false);
    for (auto& [p, row] : ech.rows()) is_pivot.at(p) = true;

    std::vector<SparseVecQ> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        SparseVecQ v;
        v.push_back({f, Rat(1)});
        for (auto& [p, row] : ech.rows()) {
            for (size_t k = 1; k < row.size(); ++k) {
                if (row[k].first == f) {
                    v.push_back({p, -row[k].second});
                    break;
                }
            }
        }
        std::sort(v.begin(), v.end());
        // Scale to a primitive integer vector, first nonzero entry positive.
        Int denom_lcm = 1;
        for (auto& [c, q] : v) {
            Int d = q.get_den();
            denom_lcm = lcm(denom_lcm, d);
        }
        Int content = 0;
        for (auto& [c, q] : v) content = gcd(content, Int(q.get_num() * (denom_lcm / q.get_den())));
        Rat scale(denom_lcm, content);
        scale.canonicalize();
        if (sgn(v.front().second) < 0) scale = -scale;
        for (auto& [c, q] : v) {
            q *= scale;
            q.canonicalize();
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

SparseVecZ z_axpy(const SparseVecZ& x, const Int& a, const SparseVecZ& y) {
    SparseVecZ r;
    r.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            r.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
            Int c = a * j->second;
            if (sgn(c) != 0) r.push_back({j->first, std::move(c)});
            ++j;
        } else {
            Int c = i->second + a * j->second;
            if (sgn(c) != 0) r.push_back({i->first, std::move(c)});
            ++i, ++j;
        }
    }
    return r;
}

SparseVecZ z_combine(const Int& a, const SparseVecZ& x, const Int& b, const SparseVecZ& y) {
    SparseVecZ scaled;
    scaled.reserve(x.size());
    for (auto& [c, v] : x) {
        Int w = a * v;
        if (sgn(w) != 0) scaled.push_back({c, std::move(w)});
    }
    return z_axpy(scaled, b, y);
}

}  // namespace

void IntegerEchelon::insert(SparseVecZ row) {
    std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
    while (!row.empty()) {
        int c = row.front().first;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            if (sgn(row.front().second) < 0)
                for (auto& [col, v] : row) v = -v;
            rows_.emplace(c, std::move(row));
            return;
        }
        const Int& a = it->second.front().second;
        const Int& b = row.front().second;
        Int r = b % a;
        if (sgn(r) == 0) {
            row = z_axpy(row, Int(-b / a), it->second);
        } else {
            // gcd step: replace the pivot by u*pivot + v*row with lead gcd(a,b)
            Int g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            SparseVecZ new_pivot = z_combine(u, it->second, v, row);
            SparseVecZ remainder = z_combine(Int(a / g), row, Int(-b / g), it->second);
            it->second = std::move(new_pivot);
            row = std::move(remainder);
        }
    }
}

bool IntegerEchelon::member(SparseVecZ row) const {
    std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end()) return false;
        const Int& a = it->second.front().second;
        const Int& b = row.front().second;
        if (sgn(b % a) != 0) return false;
        row = z_axpy(row, Int(-b / a), it->second);
    }
    return true;
}

SparseVecP FpEchelon::residual(SparseVecP row) const {
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end()) break;
        // stored rows have leading coefficient 1
        int64_t a = p_ - row.front().second % p_;
        SparseVecP r;
        r.reserve(row.size() + it->second.size());
        auto i = row.begin();
        auto j = it->second.begin();
        while (i != row.end() || j != it->second.end()) {
            if (j == it->second.end() || (i != row.end() && i->first < j->first)) {
                r.push_back(*i++);
            } else if (i == row.end() || j->first < i->first) {
                int64_t c = (a * (j->second % p_)) % p_;
                if (c) r.push_back({j->first, c});
                ++j;
            } else {
                int64_t c = (i->second + a * (j->second % p_)) % p_;
                if (c) r.push_back({i->first, c});
                ++i, ++j;
            }
        }
        row = std::move(r);
    }
    return row;
}

bool FpEchelon::insert(SparseVecP row) {
    for (auto& [c, v] : row) {
        v %= p_;
        if (v < 0) v += p_;
    }
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    row = residual(std::move(row));
    if (row.empty()) return false;
    int64_t inv = Fp(row.front().second, p_).inverse().value();
    for (auto& [c, v] : row) v = (v * inv) % p_;
    rows_.emplace(row.front().first, std::move(row));
    return true;
}

}  // namespace mkoszul
