#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dgbo/spectral.hpp"

using namespace dgbo;
using std::numbers::pi;

namespace {

std::vector<double> sample(const TorusGrid& g, double (*f)(double)) {
    std::vector<double> v(g.n_points());
    for (int j = 0; j < g.n_points(); ++j) v[j] = f(g.x(j));
    return v;
}

SpectralField random_field(const TorusGrid& g, long band, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> n;
    SpectralField f(g);
    f.coeffs()[0] = n(rng);
    for (long xi = 1; xi <= band; ++xi) f.set_mode(xi, cplx(n(rng), n(rng)));
    return f;
}

} // namespace

TEST_CASE("grid invariants") {
    TorusGrid g(64);
    CHECK(g.dealias_cutoff() == 21);
    CHECK(g.max_frequency() == 31);
    CHECK(g.frequency(g.index(-5)) == -5);
    CHECK_THROWS_AS(TorusGrid(48), Error);
    CHECK_THROWS_AS(TorusGrid(4), Error);
}

TEST_CASE("transform of constant and cosine") {
    TorusGrid g(32);
    SpectralField c = to_spectral(g, sample(g, [](double) { return 1.0; }));
    CHECK(std::abs(c.at(0) - 2.0 * pi) < 1e-13);
    for (long xi = 1; xi <= g.max_frequency(); ++xi) CHECK(std::abs(c.at(xi)) < 1e-13);

    SpectralField f = to_spectral(g, sample(g, [](double x) { return std::cos(x); }));
    CHECK(std::abs(f.at(1) - pi) < 1e-13);
    CHECK(std::abs(f.at(-1) - pi) < 1e-13);
    CHECK(std::abs(f.at(0)) < 1e-13);
    CHECK(std::abs(f.at(2)) < 1e-13);
}

TEST_CASE("roundtrip on band-limited data") {
    TorusGrid g(64);
    auto u = sample(g, [](double x) { return std::cos(3 * x) + 0.2 * std::sin(5 * x); });
    auto back = from_spectral(to_spectral(g, u));
    double err = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) err = std::max(err, std::abs(back[j] - u[j]));
    CHECK(err <= 1e-12);
    CHECK_THROWS_AS(to_spectral(g, std::vector<double>(10)), Error);
}

TEST_CASE("multipliers") {
    TorusGrid g(32);
    SpectralField c4 = to_spectral(g, sample(g, [](double x) { return std::cos(4 * x); }));
    SpectralField d = apply_multiplier(c4, [](long xi) { return std::sqrt(std::abs(double(xi))); });
    CHECK(std::abs(d.at(4) - 2.0 * pi) < 1e-12);

    SpectralField c1 = to_spectral(g, sample(g, [](double x) { return std::cos(x); }));
    SpectralField dx = apply_multiplier(c1, [](long xi) { return cplx(0.0, double(xi)); });
    auto v = from_spectral(dx);
    for (int j = 0; j < g.n_points(); ++j) CHECK(std::abs(v[j] + std::sin(g.x(j))) < 1e-13);

    auto flow = [](long xi) {
        double ph = -double(xi) * std::abs(double(xi)) * 0.0;
        return cplx(std::cos(ph), std::sin(ph));
    };
    SpectralField id = apply_multiplier(c1, flow);
    for (std::size_t i = 0; i < id.coeffs().size(); ++i) CHECK(id.coeffs()[i] == c1.coeffs()[i]);

    CHECK_THROWS_AS(apply_multiplier(c1, [](long) { return std::nan(""); }), Error);
}

TEST_CASE("multiplier composition is coefficient-wise") {
    TorusGrid g(32);
    SpectralField f = random_field(g, 15, 3);
    auto s1 = [](long xi) { return cplx(1.0 + xi * xi, 0.5 * xi); };
    auto s2 = [](long xi) { return cplx(0.25, -double(xi)); };
    SpectralField a = apply_multiplier(apply_multiplier(f, s2), s1);
    SpectralField b = apply_multiplier(f, [&](long xi) { return s1(xi) * s2(xi); });
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) CHECK(std::abs(a.coeffs()[i] - b.coeffs()[i]) < 1e-12);
}

TEST_CASE("dealiased products") {
    TorusGrid g(32);
    SpectralField c = to_spectral(g, sample(g, [](double x) { return std::cos(x); }));
    SpectralField sq = product_dealiased(c, c);
    CHECK(std::abs(sq.at(0) - pi) < 1e-13);
    CHECK(std::abs(sq.at(2) - pi / 2) < 1e-13);
    CHECK(std::abs(sq.at(-2) - pi / 2) < 1e-13);
    CHECK(l2_norm(product_dealiased(c, SpectralField(g))) == 0.0);

    const long K = g.dealias_cutoff();
    SpectralField top(g);
    top.set_mode(K, 1.0);
    SpectralField p = product_dealiased(top, top);
    CHECK(std::abs(p.at(2 * K)) == 0.0);
    CHECK(std::abs(p.at(0)) > 0.0);

    SpectralField f = random_field(g, 12, 1), h = random_field(g, 12, 2);
    SpectralField fh = product_dealiased(f, h), hf = product_dealiased(h, f);
    SpectralField lin = product_dealiased(2.0 * f + h, h);
    SpectralField ref = 2.0 * product_dealiased(f, h) + product_dealiased(h, h);
    for (std::size_t i = 0; i < fh.coeffs().size(); ++i) {
        CHECK(std::abs(fh.coeffs()[i] - hf.coeffs()[i]) < 1e-12);
        CHECK(std::abs(lin.coeffs()[i] - ref.coeffs()[i]) < 1e-11);
    }
    CHECK(fh.hermitian_defect() < 1e-13);
    CHECK_THROWS_AS(product_dealiased(f, SpectralField(TorusGrid(64))), Error);
}

TEST_CASE("Parseval") {
    TorusGrid g(64);
    for (unsigned seed = 0; seed < 5; ++seed) {
        SpectralField f = random_field(g, 31, seed);
        auto u = from_spectral(f);
        double phys = 0.0;
        for (double v : u) phys += v * v;
        phys *= 2 * pi / g.n_points();
        CHECK(std::abs(phys - l2_norm_squared(f)) <= 1e-12 * phys);
    }
}

TEST_CASE("Nyquist mode is zeroed") {
    TorusGrid g(16);
    std::vector<double> alt(16);
    for (int j = 0; j < 16; ++j) alt[j] = (j % 2 == 0) ? 1.0 : -1.0;
    SpectralField f = to_spectral(g, alt);
    CHECK(f.coeffs()[g.index(-8)] == cplx(0.0));
}

TEST_CASE("translation and integral powers") {
    TorusGrid g(32);
    SpectralField c = to_spectral(g, sample(g, [](double x) { return std::cos(x); }));
    SpectralField s = translate(c, 0.3);
    auto v = from_spectral(s);
    for (int j = 0; j < g.n_points(); ++j) CHECK(std::abs(v[j] - std::cos(g.x(j) + 0.3)) < 1e-13);
    CHECK(std::abs(integral_power(c, 2) - pi) < 1e-13);
    CHECK(std::abs(integral_power(c, 4) - 0.75 * pi) < 1e-13);
    CHECK(std::abs(integral_power(c, 3)) < 1e-13);
}
