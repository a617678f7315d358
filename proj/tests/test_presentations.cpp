#include "doctest.h"
#include "mkoszul/moduli.hpp"

using namespace mkoszul;

TEST_CASE("generator counts for the class presentations") {
    auto dcp4 = dcp_presentation(4);
    CHECK(dcp4.generators.size() == 11);  // subsets of {1..4} with 2 <= |S| <= 4
    auto keel4 = keel_presentation(4);
    CHECK(keel4.generators.size() == 10);  // 2 <= |S| <= 3 inside {1..4}
    CHECK_THROWS_AS(dcp_presentation(2), std::invalid_argument);
}

TEST_CASE("moebius images: top class and a small divisor") {
    ModuliRing ring(4);
    auto dcp = dcp_presentation(4);
    // Y_{1,2,3,4} maps to X_{1,2,3,4}
    for (auto& g : dcp.generators) {
        if (g.rep == SubsetMask::full(4)) {
            CHECK(g.image == ring.x(SubsetMask::full(4)));
        }
        if (g.rep == SubsetMask(4, {1, 2, 3})) {
            // Y_{123} -> X_{123} - X_{1234}
            CHECK(g.image == ring.x(SubsetMask(4, {1, 2, 3})) - ring.x(SubsetMask::full(4)));
        }
    }
}

TEST_CASE("DCP linear relations map to zero on the nose") {
    // the inclusion-exclusion over supersets telescopes before any reduction
    auto dcp = dcp_presentation(4);
    for (auto& combo : dcp.linear_relations) {
        IntPolynomial rel;
        for (auto& [g, c] : combo)
            rel += dcp.generators[g].image.scaled_by(Monomial::one(), Int(c));
        CHECK(rel.is_zero());
    }
}

TEST_CASE("mapped relations reduce to zero in the certified basis, n <= 5") {
    for (int n = 3; n <= 5; ++n) {
        ModuliRing ring(n);
        CAPTURE(n);
        auto dcp = validate_presentation(ring, dcp_presentation(n));
        CHECK(dcp.all_reduce_to_zero);
        CHECK(dcp.monomial_checked > 0);
        auto keel = validate_presentation(ring, keel_presentation(n));
        CHECK(keel.all_reduce_to_zero);
        CHECK(keel.linear_checked > 0);
        CHECK(keel.monomial_checked > 0);
    }
}

TEST_CASE("Keel monomial relations: nested classes keep a nonzero product") {
    // D_{12} and D_{123} are nested boundary classes: no vanishing relation,
    // and the product survives in the ring
    auto keel = keel_presentation(5);
    int a = -1, b = -1, c = -1;
    for (size_t g = 0; g < keel.generators.size(); ++g) {
        if (keel.generators[g].rep == SubsetMask(5, {1, 2})) a = static_cast<int>(g);
        if (keel.generators[g].rep == SubsetMask(5, {1, 2, 3})) b = static_cast<int>(g);
        if (keel.generators[g].rep == SubsetMask(5, {3, 4, 5})) c = static_cast<int>(g);
    }
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    REQUIRE(c >= 0);
    bool nested_found = false, crossing_found = false;
    for (auto& [x, y] : keel.monomial_relations) {
        if ((x == a && y == b) || (x == b && y == a)) nested_found = true;
        if ((x == b && y == c) || (x == c && y == b)) crossing_found = true;
    }
    CHECK(!nested_found);
    // canonical representatives avoid the distinguished point, so literal
    // crossing pairs always vanish ({123} and {345} cross over 6 points)
    CHECK(crossing_found);
    ModuliRing ring(5);
    IntPolynomial prod = keel.generators[a].image * keel.generators[b].image;
    CHECK(!ring.normal_form(prod).is_zero());
}

TEST_CASE("nonvanishing: n=3 boundary classes square to zero") {
    auto rep = nonvanishing_checks(ModuliRing(3));
    CHECK(rep.divisor_squares.size() == 3);
    for (auto& sq : rep.divisor_squares) CHECK(!sq.nonzero);
    CHECK(!rep.all_squares_nonzero);
}

TEST_CASE("nonvanishing: all divisor squares nonzero for n = 4, 5") {
    for (int n = 4; n <= 5; ++n) {
        auto rep = nonvanishing_checks(ModuliRing(n));
        CAPTURE(n);
        CHECK(rep.all_squares_nonzero);
        for (auto& sq : rep.divisor_squares) CHECK(sq.nonzero);
    }
}

TEST_CASE("nonvanishing: top generator powers below the top degree, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        auto rep = nonvanishing_checks(ModuliRing(n));
        CAPTURE(n);
        CHECK(rep.top_powers_nonzero_below);
        REQUIRE(rep.top_powers.size() == size_t(n - 1));
        for (auto& [k, nonzero] : rep.top_powers) {
            if (k < n - 1) CHECK(nonzero);
            // k = n-1 lands above the top degree; reported, not required
            if (k == n - 1) CHECK(!nonzero);
        }
    }
}
