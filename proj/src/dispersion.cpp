#include "dgbo/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dgbo/error.hpp"

namespace dgbo {

DispersionSpec DispersionSpec::fractional(double alpha) {
    require(alpha > 0.0 && alpha <= 2.0, ErrorKind::Domain, "fractional exponent must lie in (0,2]");
    DispersionSpec d;
    d.name_ = "fractional";
    d.alpha_ = alpha;
    d.kappa_ = 1.0;
    return d;
}

DispersionSpec DispersionSpec::custom(std::string name, Fn omega, double alpha, double kappa) {
    require(static_cast<bool>(omega), ErrorKind::Config, "custom dispersion needs a callable");
    require(kappa > 0.0, ErrorKind::Domain, "kappa must be positive");
    DispersionSpec d;
    d.name_ = std::move(name);
    d.alpha_ = alpha;
    d.kappa_ = kappa;
    d.fn_ = std::make_shared<const Fn>(std::move(omega));
    for (int j = 0; j <= 4000; ++j) {
        double xi = 0.25 * j + 0.5 * std::sin(static_cast<double>(j));
        double a = (*d.fn_)(xi);
        double b = (*d.fn_)(-xi);
        require(std::isfinite(a) && std::isfinite(b), ErrorKind::Numeric,
                "dispersion '" + d.name_ + "' is not finite at xi = " + std::to_string(xi));
        require(std::abs(a + b) <= 1e-12 * std::max(1.0, std::abs(a)), ErrorKind::Admissibility,
                "dispersion '" + d.name_ + "' is not odd at xi = " + std::to_string(xi));
    }
    return d;
}

DispersionSpec DispersionSpec::whitham_capillary(double tau, double kappa) {
    require(tau > 0.0, ErrorKind::Domain, "capillary coefficient must be positive");
    auto fn = [tau](double xi) {
        double a = std::abs(xi);
        double w = std::sqrt(std::tanh(a) * a * (1.0 + tau * xi * xi));
        return xi < 0.0 ? -w : w;
    };
    return custom("whitham-capillary", fn, 0.5, kappa);
}

double DispersionSpec::operator()(double xi) const {
    if (!fn_) return -xi * std::pow(std::abs(xi), alpha_);
    return (*fn_)(xi);
}

double DispersionSpec::energy_weight(double xi) const {
    if (xi == 0.0) return 0.0;
    if (!fn_) return std::pow(std::abs(xi), alpha_);
    return -(*this)(xi) / xi;
}

DispersionSpec DispersionSpec::negated() const {
    DispersionSpec src = *this;
    DispersionSpec d;
    d.name_ = name_ + "-negated";
    d.alpha_ = alpha_;
    d.kappa_ = kappa_;
    d.fn_ = std::make_shared<const Fn>([src](double xi) { return -src(xi); });
    return d;
}

double omega(const DispersionSpec& spec, double xi) { return spec(xi); }

namespace {

struct Windows {
    RatioWindow growth, first, second, resonance;
    std::size_t scanned = 0;
};

void widen(RatioWindow& w, double v, bool& first_seen) {
    if (!first_seen) {
        w = {v, v};
        first_seen = true;
        return;
    }
    w.lo = std::min(w.lo, v);
    w.hi = std::max(w.hi, v);
}

double first_derivative(const DispersionSpec& s, double xi, double h) {
    auto d = [&](double hh) { return (s(xi + hh) - s(xi - hh)) / (2.0 * hh); };
    return (4.0 * d(h / 2) - d(h)) / 3.0;
}

double second_derivative(const DispersionSpec& s, double xi, double h) {
    auto d = [&](double hh) { return (s(xi + hh) - 2.0 * s(xi) + s(xi - hh)) / (hh * hh); };
    return (4.0 * d(h / 2) - d(h)) / 3.0;
}

Windows scan(const DispersionSpec& s, long xi_max) {
    const double a = s.alpha();
    const double kappa = s.kappa();
    const double h = 1e-3;
    Windows w;
    bool g0 = false, f0 = false, s0 = false, r0 = false;
    for (long n = static_cast<long>(std::floor(kappa)) + 1; n <= xi_max; ++n) {
        for (double xi : {static_cast<double>(n), -static_cast<double>(n)}) {
            double om = s(xi);
            require(std::isfinite(om), ErrorKind::Numeric, "dispersion is not finite");
            double r = std::abs(xi);
            widen(w.growth, std::abs(om) / std::pow(r, 1.0 + a), g0);
            widen(w.first, std::abs(first_derivative(s, xi, h)) / std::pow(r, a), f0);
            widen(w.second, std::abs(second_derivative(s, xi, h)) / std::pow(r, a - 1.0), s0);
        }
    }
    // Every zero-sum triple of nonzero integers is, up to permutation and a global sign,
    // (p, q, -(p+q)) with p >= q >= 1; Omega flips sign with the triple, so this covers the scan.
    std::vector<double> om(static_cast<std::size_t>(xi_max) + 1);
    for (long n = 0; n <= xi_max; ++n) om[n] = s(static_cast<double>(n));
    for (long q = 1; 2 * q <= xi_max; ++q) {
        for (long p = q; p + q <= xi_max; ++p) {
            long top = p + q;
            if (static_cast<double>(top) <= kappa) continue;
            double res = om[p] + om[q] - om[top];
            double ratio = std::abs(res) / (std::pow(static_cast<double>(top), a) * q);
            widen(w.resonance, ratio, r0);
            ++w.scanned;
        }
    }
    return w;
}

double shift(const RatioWindow& a, const RatioWindow& b) {
    auto rel = [](double x, double y) {
        double m = std::max(std::abs(x), std::abs(y));
        return m == 0.0 ? 0.0 : std::abs(x - y) / m;
    };
    return std::max(rel(a.lo, b.lo), rel(a.hi, b.hi));
}

bool admissible(const RatioWindow& w) { return w.lo > 0.0 && std::isfinite(w.hi); }

} // namespace

ConditionReport check_conditions(const DispersionSpec& spec, long xi_max) {
    require(static_cast<double>(xi_max) >= 4.0 * spec.kappa(), ErrorKind::Domain,
            "xi_max must be at least 4 kappa");
    for (double xi : {0.5, 1.0, 3.0, 17.0, static_cast<double>(xi_max)}) {
        double a = spec(xi), b = spec(-xi);
        require(std::isfinite(a) && std::isfinite(b), ErrorKind::Numeric, "dispersion is not finite");
        require(std::abs(a + b) <= 1e-12 * std::max(1.0, std::abs(a)), ErrorKind::Admissibility,
                "dispersion is not odd");
    }
    Windows base = scan(spec, xi_max);
    Windows twice = scan(spec, 2 * xi_max);
    ConditionReport r;
    r.spec_name = spec.name();
    r.alpha = spec.alpha();
    r.kappa = spec.kappa();
    r.xi_max = xi_max;
    r.growth = base.growth;
    r.first = base.first;
    r.second = base.second;
    r.resonance = base.resonance;
    r.growth_doubled = twice.growth;
    r.first_doubled = twice.first;
    r.second_doubled = twice.second;
    r.resonance_doubled = twice.resonance;
    r.scan_size = base.scanned;
    r.max_shift = std::max({shift(base.growth, twice.growth), shift(base.first, twice.first),
                            shift(base.second, twice.second),
                            shift(base.resonance, twice.resonance)});
    r.pass = admissible(base.growth) && admissible(base.first) && admissible(base.second) &&
             admissible(base.resonance) && r.max_shift <= 0.10;
    if (spec.name() == "whitham-capillary")
        r.note = "odd extension sgn(xi)*sqrt(tanh|xi| |xi| (1+tau xi^2)) used";
    return r;
}

} // namespace dgbo
