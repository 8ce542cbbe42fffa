#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dgbo/littlewood_paley.hpp"

using namespace dgbo;
using std::numbers::pi;

TEST_CASE("bump profile") {
    CHECK(bump_transition(0.0) == 0.0);
    CHECK(bump_transition(1.0) == 1.0);
    CHECK(bump_transition(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
        double v = bump_transition(i / 100.0);
        CHECK(v >= prev);
        CHECK(std::abs(v + bump_transition(1.0 - i / 100.0) - 1.0) < 1e-15);
        prev = v;
    }
    CHECK(chi(1.25) == 1.0);
    CHECK(chi(-1.0) == 1.0);
    CHECK(chi(1.6) == 0.0);
    CHECK(chi(-2.0) == 0.0);
    CHECK(std::abs(chi(1.5) - 0.1090968211956129383) < 1e-15);
    CHECK(chi(1.4) == chi(-1.4));
}

TEST_CASE("dyadic pieces") {
    CHECK(std::abs(chi_k(2, 3.0) - 0.8909031788043870617) < 1e-15);
    CHECK(chi_k(0, 1.0) == 1.0);
    CHECK(chi_k(0, 0.0) == 0.0);
    CHECK(chi_k(5, 10.0) == 0.0);
    CHECK_THROWS_AS(chi_k(-1, 1.0), Error);

    // partition of unity on nonzero integers, and chi_le / chi_gt consistency
    for (long xi = 1; xi <= 5000; xi += 7) {
        double s = 0.0;
        for (int k = 0; k <= 14; ++k) s += chi_k(k, double(xi));
        CHECK(std::abs(s - 1.0) < 1e-14);
        for (int k : {0, 3, 6}) {
            double le = 0.0;
            for (int j = 0; j <= k; ++j) le += chi_k(j, double(xi));
            CHECK(std::abs(le - chi_le(k, double(xi))) < 1e-14);
            CHECK(std::abs(chi_le(k, double(xi)) + chi_gt(k, double(xi)) - 1.0) < 1e-14);
        }
    }
    CHECK(chi_gt(3, 0.0) == 0.0);
}

TEST_CASE("modulation cutoffs") {
    CHECK(eta_l(0, 1.0) == 1.0);
    CHECK(eta_l(2, 4.0) == 1.0);
    CHECK(eta_l(2, 0.5) == 0.0);
    for (int l = 0; l <= 6; ++l)
        for (double x = -300; x <= 300; x += 0.37) {
            bool sup = in_eta_support(l, x);
            if (!sup) CHECK(eta_l(l, x) == 0.0);
        }
    double s = 0.0;
    for (int l = 0; l <= 20; ++l) s += eta_l(l, 777.7);
    CHECK(std::abs(s - 1.0) < 1e-14);
}

TEST_CASE("projections and Sobolev norm") {
    TorusGrid g(64);
    SpectralField f(g);
    f.set_mode(3, pi);  // cos 3x
    CHECK(std::abs(sobolev_norm(f, 1.0) - 6.3281676480691930564) < 1e-13);

    SpectralField p1 = lp_project(f, 1), p2 = lp_project(f, 2);
    SpectralField sum = p1 + p2;
    CHECK(std::abs(sum.at(3) - f.at(3)) < 1e-15);
    SpectralField le = lp_project_le(f, 1), gt = lp_project_gt(f, 1);
    CHECK(std::abs(le.at(3) + gt.at(3) - f.at(3)) < 1e-15);
    CHECK(std::abs(sobolev_norm(f, 0.0) - std::sqrt(pi) * std::sqrt(
        std::pow(chi_k(1, 3.0), 2) + std::pow(chi_k(2, 3.0), 2))) < 1e-13);
    CHECK(sobolev_norm(SpectralField(g), 2.0) == 0.0);
}
