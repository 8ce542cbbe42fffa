#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "dgbo/error.hpp"
#include "dgbo/resonance.hpp"

using namespace dgbo;

TEST_CASE("case identifiers") {
    for (std::string id : {"sigma1", "sigma3", "m1", "m5", "a2", "aprime3", "nu", "inv-resonance",
                           "resonance"})
        CHECK(case_name(parse_case(id)) == id);
    CHECK_THROWS_AS(parse_case("m6"), Error);
    CHECK_THROWS_AS(parse_case("sigma"), Error);
    CHECK_THROWS_AS(parse_case("bogus"), Error);
}

TEST_CASE("least-squares slope") {
    std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
    CHECK(ls_slope(x, y) == doctest::Approx(2.0));
    std::vector<double> one{1};
    CHECK(ls_slope(one, one) == 0.0);
    CHECK_THROWS_AS(ls_slope(x, one), Error);
}

TEST_CASE("resonance scan reproduces the window") {
    BoundCase c = parse_case("resonance");
    c.alpha = 0.25;
    c.k_max = 8;
    auto rep = worst_constant(c);
    CHECK(rep.max_ratio == doctest::Approx(0.99938905137022971).epsilon(1e-12));
    CHECK(rep.min_ratio == doctest::Approx(0.31820716949257061).epsilon(1e-12));
    CHECK(rep.argmax.size() == 3);
}

TEST_CASE("sigma pieces stay bounded by the low frequency") {
    for (int j = 1; j <= 3; ++j) {
        BoundCase c = parse_case("sigma" + std::to_string(j));
        c.k_min = 6;
        c.k_max = 10;
        c.budget = 2'000'000;
        auto rep = worst_constant(c);
        CHECK(rep.tuples > 0);
        CHECK(rep.max_ratio < 20.0);
        CHECK(rep.slope < 0.05);
        CHECK(rep.per_scale.size() == 5);
    }
}

TEST_CASE("subsampling is seeded and can be refused") {
    BoundCase c = parse_case("m2");
    c.k_min = 6;
    c.k_max = 6;
    c.budget = 20'000;
    c.seed = 5;
    auto a = worst_constant(c);
    auto b = worst_constant(c);
    CHECK(a.subsampled);
    CHECK(a.max_ratio == b.max_ratio);
    CHECK(a.argmax == b.argmax);
    c.allow_subsample = false;
    CHECK_THROWS_AS(worst_constant(c), Error);
    c.k_max = 15;
    CHECK_THROWS_AS(worst_constant(c), Error);
}

TEST_CASE("symbol evaluation checks arity") {
    BoundCase c = parse_case("sigma1");
    std::vector<long> four{1, 2, 3, -6};
    CHECK_THROWS_AS(symbol_eval(c, Scales{}, four), Error);
}
