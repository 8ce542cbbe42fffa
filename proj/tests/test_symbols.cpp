#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dgbo/error.hpp"
#include "dgbo/littlewood_paley.hpp"
#include "dgbo/resonance.hpp"

using namespace dgbo;

namespace {

long draw(std::mt19937_64& rng, int k) {
    // nonzero integer of magnitude about 2^k
    long hi = 1L << (k + 1);
    std::uniform_int_distribution<long> u(1, hi);
    long v = u(rng);
    return (rng() & 1) ? v : -v;
}

Scales random_scales(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> u(0, 7);
    return {u(rng), u(rng), u(rng), u(rng), u(rng)};
}

} // namespace

TEST_CASE("frequency triples") {
    FrequencyTriple t(5, -7, 2);
    auto m = t.ordered_magnitudes();
    CHECK(m == std::array<long, 3>{7, 5, 2});
    CHECK_THROWS_AS(FrequencyTriple(1, 1, 1), Error);
    CHECK_THROWS_AS(FrequencyTriple(0, 1, -1), Error);
    auto d = DispersionSpec::fractional(1.0);
    // -(1) - (4) + 9 = ... omega(x) = -x|x|: omega(1)+omega(2)+omega(-3) = -1 - 4 + 9
    CHECK(resonance(d, FrequencyTriple(1, 2, -3)) == 4.0);
}

TEST_CASE("inverse resonance gap") {
    CHECK(std::abs(inv_resonance_gap(1.0, 40, 2, -45, 3) - 0.0001984126984126984) < 1e-18);
    CHECK_THROWS_AS(inv_resonance_gap(1.0, 1, 1, 1, 1), Error);
    CHECK_THROWS_AS(inv_resonance_gap(1.0, 3, -3, 2, -2), Error);
}

TEST_CASE("sigma splits into three pieces") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 10000; ++n) {
        Scales k = random_scales(rng);
        long x1 = draw(rng, k.k1), x3 = draw(rng, k.k3);
        long x2 = -x1 - x3;
        auto lhs = sigma(k, x1, x2, x3) + sigma(k, x2, x1, x3);
        std::complex<double> rhs = 0.0;
        for (int j = 1; j <= 3; ++j) rhs += sigma_part(j, k, x1, x2, x3);
        REQUIRE(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
    CHECK_THROWS_AS(sigma_part(4, Scales{}, 1, -2, 1), Error);
    CHECK_THROWS_AS(sigma(Scales{}, 1, 1, 1), Error);
}

TEST_CASE("nu vanishes when the shift stays inside one block") {
    Scales k{6, 6, 0, 0, 0};
    CHECK(nu(k, -61, 60, 1) == 0.0);
    CHECK(nu(k, -91, 90, 1) != 0.0);
}

TEST_CASE("m splits into five pieces") {
    std::mt19937_64 rng(12);
    auto d = DispersionSpec::fractional(0.5);
    int checked = 0;
    for (int n = 0; n < 10000; ++n) {
        Scales k = random_scales(rng);
        long xa = draw(rng, k.ka), xb = draw(rng, k.kb), x3 = draw(rng, k.k3);
        long x2 = -xa - xb - x3;
        if (x2 == 0 || xa + xb == 0 || x2 + xb == 0) continue;
        auto lhs = m_symbol(d, k, xa, xb, x2, x3) + m_symbol(d, k, x2, xb, xa, x3);
        std::complex<double> rhs = 0.0;
        for (int j = 1; j <= 5; ++j) rhs += m_part(j, d, k, xa, xb, x2, x3);
        REQUIRE(std::abs(lhs - rhs) <= 1e-11 * (1.0 + std::abs(lhs)));
        ++checked;
    }
    CHECK(checked > 5000);
}

TEST_CASE("A and A' split into three pieces") {
    std::mt19937_64 rng(13);
    auto d = DispersionSpec::fractional(0.75);
    int checked = 0;
    for (int n = 0; n < 10000; ++n) {
        Scales k = random_scales(rng);
        long xa = draw(rng, k.ka), xb = draw(rng, k.kb), x3 = draw(rng, k.k3);
        long x2 = -xa - xb - x3;
        if (x2 == 0 || xa + xb == 0 || x2 + xb == 0 || xa + x2 == 0) continue;
        double a = a_combination(d, k, xa, xb, x2, x3);
        double ap = a_prime_combination(d, k, xa, xb, x2, x3);
        double sa = 0.0, sap = 0.0;
        for (int i = 1; i <= 3; ++i) {
            sa += a_part(i, d, k, xa, xb, x2, x3);
            sap += a_prime_part(i, d, k, xa, xb, x2, x3);
        }
        REQUIRE(std::abs(a - sa) <= 1e-11 * (1.0 + std::abs(a)));
        REQUIRE(std::abs(ap - sap) <= 1e-11 * (1.0 + std::abs(ap)));
        ++checked;
    }
    CHECK(checked > 5000);
}
