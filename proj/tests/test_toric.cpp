#include "mkoszul/toric.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mkoszul/rank_oracle.hpp"

using namespace mkoszul;

namespace {

Fan load(const std::string& name) {
    std::ifstream in(std::string(FAN_DATA_DIR) + "/" + name + ".json");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return fan_from_json_text(ss.str());
}

}  // namespace

TEST_CASE("bundled fans validate as smooth and complete") {
    for (const char* name : {"p1", "p2", "p3", "p1xp1", "p1xp1xp1", "p2xp1", "permutohedral2",
                             "permutohedral3", "loday2"}) {
        CAPTURE(name);
        CHECK_NOTHROW(validate_fan(load(name)));
    }
}

TEST_CASE("smoothness validation rejects a non-unimodular cone") {
    // rays e1, e1 + 2 e2: determinant 2, the weighted projective pattern
    Fan fan;
    fan.dim = 2;
    fan.rays = {{Int(1), Int(0)}, {Int(1), Int(2)}, {Int(-1), Int(-1)}};
    fan.cones = {{0, 1}, {1, 2}, {2, 0}};
    try {
        validate_fan(fan);
        FAIL("expected a smoothness diagnostic");
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("|det| = 2") != std::string::npos);
    }
}

TEST_CASE("completeness validation rejects a fan with a boundary facet") {
    Fan fan;
    fan.dim = 2;
    fan.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}};
    fan.cones = {{0, 1}};
    CHECK_THROWS_AS(validate_fan(fan), std::runtime_error);
}

TEST_CASE("flag verdicts") {
    auto v1 = is_flag(load("p1xp1"));
    CHECK(v1.flag);
    auto v2 = is_flag(load("p2"));
    CHECK(!v2.flag);
    CHECK(v2.witness == std::vector<int>{1, 2, 3});
    auto v3 = is_flag(load("permutohedral2"));
    CHECK(v3.flag);
    auto v4 = is_flag(load("permutohedral3"));
    CHECK(v4.flag);
    auto v5 = is_flag(load("p3"));
    CHECK(!v5.flag);
    // every triple of rays spans a cone; the empty clique is all four rays
    CHECK(v5.witness == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("danilov presentation: projective line and plane") {
    auto p1 = danilov_presentation(load("p1"));
    CHECK(p1.ray_count == 2);
    CHECK(p1.nonfaces == std::vector<std::vector<int>>{{0, 1}});
    CHECK(p1.quadratic);
    CHECK(p1.rank_vector == std::vector<long>{1, 1});

    auto p2 = danilov_presentation(load("p2"));
    CHECK(p2.nonfaces == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(!p2.quadratic);
    CHECK(p2.rank_vector == std::vector<long>{1, 1, 1});

    auto pp = danilov_presentation(load("p1xp1"));
    CHECK(pp.quadratic);
    CHECK(pp.rank_vector == std::vector<long>{1, 2, 1});
}

TEST_CASE("toric Koszul check: product of lines") {
    auto report = toric_koszul_check(load("p1xp1"));
    CHECK(report.flag);
    CHECK(report.quadratic);
    CHECK(report.gb_verified);
    CHECK(report.counting_match);
    CHECK(report.hilbert == std::vector<long>{1, 2, 1});
    CHECK(report.palindromic);
    CHECK(report.koszul_certified);
    CHECK(report.verdict == "koszul");
}

TEST_CASE("toric Koszul check: projective plane is not flag") {
    auto report = toric_koszul_check(load("p2"));
    CHECK(!report.flag);
    CHECK(report.witness == std::vector<int>{1, 2, 3});
    CHECK(!report.quadratic);
    CHECK(report.verdict == "not_koszul");
}

TEST_CASE("toric Koszul check: hexagon fan") {
    auto report = toric_koszul_check(load("permutohedral2"));
    CHECK(report.flag);
    CHECK(report.quadratic);
    CHECK(report.koszul_certified);
    CHECK(report.hilbert == std::vector<long>{1, 4, 1});
    CHECK(report.palindromic);
}

TEST_CASE("toric Koszul check: pentagon (Loday) fan") {
    auto report = toric_koszul_check(load("loday2"));
    CHECK(report.flag);
    CHECK(report.koszul_certified);
    CHECK(report.hilbert == std::vector<long>{1, 3, 1});
    CHECK(report.palindromic);
}

TEST_CASE("toric Koszul check: every bundled flag fan certifies; non-flag fans have a cubic") {
    for (const char* name : {"p1", "p1xp1", "p1xp1xp1", "permutohedral2", "permutohedral3",
                             "loday2"}) {
        CAPTURE(name);
        auto report = toric_koszul_check(load(name));
        CHECK(report.flag);
        CHECK(report.koszul_certified);
        CHECK(report.palindromic);
    }
    for (const char* name : {"p2", "p3", "p2xp1"}) {
        CAPTURE(name);
        auto pres = danilov_presentation(load(name));
        bool has_cubic = false;
        for (auto& nf : pres.nonfaces)
            if (nf.size() >= 3) has_cubic = true;
        CHECK(has_cubic);
    }
}

TEST_CASE("rank vector is invariant under elimination (pivot independence)") {
    for (const char* name : {"p1xp1", "permutohedral2", "loday2", "p1xp1xp1"}) {
        CAPTURE(name);
        Fan fan = load(name);
        auto pres = danilov_presentation(fan);
        auto report = toric_koszul_check(fan);
        std::vector<long> oracle = report.oracle_dims;
        while (!oracle.empty() && oracle.back() == 0) oracle.pop_back();
        CHECK(oracle == pres.rank_vector);
    }
}

TEST_CASE("p1: rank vector (1,1) through the quotient") {
    auto report = toric_koszul_check(load("p1"));
    CHECK(report.hilbert == std::vector<long>{1, 1});
    CHECK(report.koszul_certified);
}
