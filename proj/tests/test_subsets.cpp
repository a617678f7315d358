#include "mkoszul/subsets.hpp"

#include <map>
#include <vector>

#include "doctest.h"

using namespace mkoszul;

namespace {

SubsetMask ss(int n, std::initializer_list<int> elems) { return SubsetMask(n, elems); }

// Oracle: reachability in the covering relation, by fixpoint iteration over
// all of 2^{1..n}. Kept independent of the closed form in exotic_leq.
std::vector<std::vector<bool>> closure_oracle(int n) {
    const int m = 1 << n;
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    auto max_of = [&](uint64_t bits) { return bits ? 64 - __builtin_clzll(bits) : 0; };
    for (int i = 0; i < m; ++i) {
        reach[i][i] = true;
        // remove a non-maximal element
        for (int e = 1; e <= n; ++e) {
            uint64_t b = uint64_t(i);
            if (((b >> (e - 1)) & 1) && e != max_of(b)) reach[i][b & ~(uint64_t(1) << (e - 1))] = true;
        }
        // append a new maximum
        for (int e = max_of(i) + 1; e <= n; ++e) reach[i][i | (1 << (e - 1))] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (reach[i][j])
                    for (int k = 0; k < m; ++k)
                        if (reach[j][k] && !reach[i][k]) {
                            reach[i][k] = true;
                            changed = true;
                        }
    }
    return reach;
}

}  // namespace

TEST_CASE("boundary removes the maximal element") {
    CHECK(boundary(ss(5, {1, 2, 3})) == ss(5, {1, 2}));
    CHECK(boundary(ss(5, {4})) == SubsetMask(5));
    CHECK(boundary(ss(5, {1, 3, 5})) == ss(5, {1, 3}));
    CHECK_THROWS_AS(boundary(SubsetMask(5)), std::invalid_argument);
}

TEST_CASE("subset plumbing") {
    SubsetMask s = ss(6, {1, 4, 6});
    CHECK(s.size() == 3);
    CHECK(s.min() == 1);
    CHECK(s.max() == 6);
    CHECK(s.contains(4));
    CHECK(!s.contains(2));
    CHECK(s.members() == std::vector<int>{1, 4, 6});
    CHECK(s.str() == "{1,4,6}");
    CHECK_THROWS_AS(ss(4, {1, 2}).require_same_ground(ss(5, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(exotic_leq(ss(4, {1}), ss(5, {1})), std::invalid_argument);
}

TEST_CASE("exotic order: single covering steps") {
    CHECK(exotic_leq(ss(4, {1, 2}), ss(4, {1, 2, 3})));
    CHECK(exotic_leq(ss(4, {1, 2, 3}), ss(4, {2, 3})));
}

TEST_CASE("exotic order: incomparable pair") {
    CHECK(!exotic_leq(ss(4, {1, 3}), ss(4, {2, 3})));
    CHECK(!exotic_leq(ss(4, {2, 3}), ss(4, {1, 3})));
}

TEST_CASE("exotic order matches the transitive-closure oracle, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        auto reach = closure_oracle(n);
        const int m = 1 << n;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                CAPTURE(n);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(exotic_leq(SubsetMask(n, i), SubsetMask(n, j)) == reach[i][j]);
            }
    }
}

TEST_CASE("exotic order is antisymmetric, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const int m = 1 << n;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                SubsetMask a(n, i), b(n, j);
                CHECK(!(exotic_leq(a, b) && exotic_leq(b, a)));
            }
    }
}

TEST_CASE("canonical order: spec comparisons") {
    CHECK(canonical_less(ss(4, {1, 2, 3}), ss(4, {1, 2, 3, 4})));
    CHECK(canonical_less(ss(4, {1, 2, 3, 4}), ss(4, {1, 2, 4})));
    CHECK(canonical_less(ss(4, {1, 3, 4}), ss(4, {2, 3, 4})));
}

TEST_CASE("canonical order extends the exotic order and is total, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const int m = 1 << n;
        std::vector<SubsetMask> all;
        for (int i = 0; i < m; ++i) all.push_back(SubsetMask(n, i));
        for (auto& a : all)
            for (auto& b : all) {
                auto c = canonical_compare(a, b);
                if (a == b) {
                    CHECK(c == std::strong_ordering::equal);
                } else {
                    CHECK(c != std::strong_ordering::equal);
                    CHECK(canonical_compare(b, a) == (c == std::strong_ordering::less
                                                          ? std::strong_ordering::greater
                                                          : std::strong_ordering::less));
                    if (exotic_leq(a, b)) CHECK(c == std::strong_ordering::less);
                }
                // transitivity
                for (auto& d : all) {
                    if (canonical_less(a, b) && canonical_less(b, d)) CHECK(canonical_less(a, d));
                }
            }
    }
}

TEST_CASE("MI-complement classification: worked examples") {
    CHECK(mi_complement_status(ss(6, {1, 4, 6}), ss(6, {1, 2, 3, 4, 5})) == MiStatus::mi_essential);
    CHECK(mi_complement_status(ss(6, {1, 4, 6}), ss(6, {1, 2, 3, 4})) == MiStatus::not_mi);
    CHECK(mi_complement_status(ss(6, {1, 4, 6}), ss(6, {1, 2, 4})) == MiStatus::mi_inessential);
    CHECK(mi_complement_status(ss(6, {1, 5, 6}), ss(6, {1, 2, 4})) == MiStatus::mi_essential);
    CHECK(mi_complement_status(ss(6, {2, 5, 6}), ss(6, {1, 2, 4})) == MiStatus::mi_essential);
    CHECK(mi_complement_status(ss(6, {4, 5, 6}), ss(6, {1, 2, 4})) == MiStatus::mi_essential);
    CHECK_THROWS_AS(mi_complement_status(ss(6, {1, 2}), ss(6, {1, 2, 3})), std::invalid_argument);
}

TEST_CASE("MI-complement forces max(S) > max(T), n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        const int m = 1 << n;
        for (int i = 0; i < m; ++i) {
            SubsetMask s(n, i);
            if (s.size() < 3) continue;
            for (int j = 0; j < m; ++j) {
                SubsetMask t(n, j);
                if (t.size() < 3) continue;
                if (mi_complement_status(s, t) != MiStatus::not_mi) CHECK(s.max() > t.max());
            }
        }
    }
}
