#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

namespace dgbo {

// Odd real dispersion relation omega with growth exponent alpha beyond kappa.
class DispersionSpec {
public:
    using Fn = std::function<double(double)>;

    // omega(xi) = -xi |xi|^alpha
    static DispersionSpec fractional(double alpha);
    // Arbitrary callable; oddness is checked on a sample set.
    static DispersionSpec custom(std::string name, Fn omega, double alpha, double kappa);
    // sgn(xi) sqrt(tanh|xi| |xi| (1 + tau xi^2)), effective alpha = 1/2
    static DispersionSpec whitham_capillary(double tau, double kappa = 10.0);

    double operator()(double xi) const;
    double alpha() const { return alpha_; }
    double kappa() const { return kappa_; }
    bool is_fractional() const { return !fn_; }
    const std::string& name() const { return name_; }
    // -omega(xi)/xi, the symbol of the quadratic part of the energy; 0 at xi = 0.
    double energy_weight(double xi) const;
    // Same relation with omega replaced by -omega.
    DispersionSpec negated() const;

private:
    DispersionSpec() = default;
    std::string name_;
    double alpha_ = 0.5;
    double kappa_ = 1.0;
    std::shared_ptr<const Fn> fn_;
};

double omega(const DispersionSpec& spec, double xi);

struct RatioWindow {
    double lo = 0.0;
    double hi = 0.0;
};

struct ConditionReport {
    std::string spec_name;
    double alpha = 0.0;
    double kappa = 0.0;
    long xi_max = 0;
    RatioWindow growth;     // |omega| / |xi|^{1+alpha}
    RatioWindow first;      // |omega'| / |xi|^alpha
    RatioWindow second;     // |omega''| / |xi|^{alpha-1}
    RatioWindow resonance;  // |Omega| / (|xi1*|^alpha |xi3*|)
    RatioWindow growth_doubled, first_doubled, second_doubled, resonance_doubled;
    double max_shift = 0.0;  // largest relative endpoint move under doubling xi_max
    std::size_t scan_size = 0;
    bool pass = false;
    std::string note;
};

ConditionReport check_conditions(const DispersionSpec& spec, long xi_max);

} // namespace dgbo
