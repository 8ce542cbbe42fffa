#include "dgbo/littlewood_paley.hpp"

#include <cmath>

namespace dgbo {
namespace {

double edge(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

constexpr double kInner = 5.0 / 4.0;
constexpr double kOuter = 8.0 / 5.0;

} // namespace

double bump_transition(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double a = edge(t);
    double b = edge(1.0 - t);
    return a / (a + b);
}

double chi(double xi) {
    double r = std::abs(xi);
    if (r <= kInner) return 1.0;
    if (r >= kOuter) return 0.0;
    return bump_transition((kOuter - r) / (kOuter - kInner));
}

double chi_k(int k, double xi) {
    require(k >= 0, ErrorKind::Domain, "dyadic index must be nonnegative");
    return chi(std::ldexp(xi, -k)) - chi(std::ldexp(xi, 1 - k));
}

double chi_le(int k, double xi) {
    require(k >= 0, ErrorKind::Domain, "dyadic index must be nonnegative");
    return chi(std::ldexp(xi, -k)) - chi(2.0 * xi);
}

double chi_gt(int k, double xi) {
    require(k >= 0, ErrorKind::Domain, "dyadic index must be nonnegative");
    if (xi == 0.0) return 0.0;
    return 1.0 - chi(std::ldexp(xi, -k));
}

double eta_l(int l, double x) {
    require(l >= 0, ErrorKind::Domain, "modulation index must be nonnegative");
    if (l == 0) return chi(x);
    return chi(std::ldexp(x, -l)) - chi(std::ldexp(x, 1 - l));
}

bool in_eta_support(int l, double x) {
    require(l >= 0, ErrorKind::Domain, "modulation index must be nonnegative");
    double r = std::abs(x);
    if (l == 0) return r < kOuter;
    return r > std::ldexp(kInner, l - 1) && r < std::ldexp(kOuter, l);
}

SpectralField lp_project(const SpectralField& f, int k) {
    return apply_multiplier(f, [k](long xi) { return chi_k(k, static_cast<double>(xi)); });
}

SpectralField lp_project_le(const SpectralField& f, int k) {
    return apply_multiplier(f, [k](long xi) { return chi_le(k, static_cast<double>(xi)); });
}

SpectralField lp_project_gt(const SpectralField& f, int k) {
    return apply_multiplier(f, [k](long xi) { return chi_gt(k, static_cast<double>(xi)); });
}

double sobolev_norm(const SpectralField& f, double s) {
    require(std::isfinite(s), ErrorKind::Domain, "regularity index must be finite");
    double total = std::norm(f.at(0));
    const long top = f.grid().max_frequency();
    // chi_k(xi) vanishes once 2^k * 5/8 >= |xi|.
    int kmax = 0;
    while (std::ldexp(5.0 / 8.0, kmax) < static_cast<double>(top)) ++kmax;
    for (int k = 0; k <= kmax; ++k) {
        double block = 0.0;
        for (long xi = 1; xi <= top; ++xi) {
            double c = chi_k(k, static_cast<double>(xi));
            if (c == 0.0) continue;
            block += c * c * (std::norm(f.at(xi)) + std::norm(f.at(-xi)));
        }
        total += std::exp2(2.0 * k * s) * block / kTwoPi;
    }
    return std::sqrt(total);
}

} // namespace dgbo
