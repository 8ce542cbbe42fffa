#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dgbo/dispersion.hpp"
#include "dgbo/spectral.hpp"

namespace dgbo {

// Discrete (tau, xi) lattice: tau in dtau * Z, xi in Z.
struct BoxGrid {
    DispersionSpec dispersion = DispersionSpec::fractional(0.5);
    double dtau = 0.25;
    int l_cap = 12;
    int k_cap = 10;
    double tau_window = 1e300;            // |tau| <= tau_window
    std::size_t max_points = 20'000'000;  // per function
};

// Nonnegative function supported in D_{l,k}; one contiguous tau run per frequency.
class BoxFunction {
public:
    struct Column {
        long xi = 0;
        long start = 0;  // tau index of values[0]
        std::vector<double> values;
    };

    BoxFunction(int l, int k, double dtau, std::vector<Column> columns);

    int l() const { return l_; }
    int k() const { return k_; }
    double dtau() const { return dtau_; }
    const std::vector<Column>& columns() const { return columns_; }
    // (dtau sum f^2)^{1/2}
    double l2_norm() const { return norm_; }
    std::size_t point_count() const;
    // True when every nonzero sample satisfies the box constraint for this grid's dispersion.
    bool in_box(const BoxGrid& grid) const;

    BoxFunction scaled(double lambda) const;
    // Shift every tau index by `steps` grid points (leaves the box unless compensated).
    BoxFunction shifted_tau(long steps) const;

private:
    int l_, k_;
    double dtau_;
    std::vector<Column> columns_;
    double norm_;
};

// Random unit-norm function on D_{l,k}; deterministic in seed.
BoxFunction sample_box_function(const BoxGrid& grid, int l, int k, std::uint64_t seed);
// Single point of height `mass` at (tau_index * dtau, xi).
BoxFunction point_mass(const BoxGrid& grid, int l, int k, long tau_index, long xi, double mass);

enum class BoundVariant { Generic, Improved };

struct ConvolutionReport {
    double value = 0.0;
    double majorant = 0.0;
    double ratio = 0.0;
    std::size_t tuples = 0;  // frequency tuples with overlapping tau runs
    double dtau = 0.0;
};

// (f1 * ... * fn)(0,0) for n = 3 or 4: dtau^{n-1} times the sum over zero-sum (tau, xi) tuples.
ConvolutionReport multi_convolution_at_origin(std::span<const BoxFunction> fs, BoundVariant variant,
                                              double alpha);
double convolution_majorant(std::span<const BoxFunction> fs, BoundVariant variant, double alpha);

// Regression of max ratio against a scale index over seeded samples.
struct ConvolutionScale {
    int scale = 0;
    std::vector<int> l, k;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    int samples = 0;
};

struct ConvolutionSweep {
    std::string family;
    BoundVariant variant = BoundVariant::Generic;
    double alpha = 0.0;
    std::vector<ConvolutionScale> scales;
    double slope = 0.0;
    bool pass = false;
};

// Configurations for one scale index j of a named family:
//   "tri-mod": k=(2,2,2), l=(j,j,j)        "tri-freq": k=(j,j,0), l=(lr,lr,lr)
//   "quad-mod": k=(2,2,2,2), l=(j,j,j,j)   "quad-freq": k=(j,j,0,0), l=(lr,...)
// with lr = ceil(alpha j) + l_fixed, the modulation of the high-high-low resonance.
struct SweepSpec {
    std::string family = "tri-mod";
    int j_min = 3;
    int j_max = 10;
    int l_fixed = 1;
    int samples = 200;
    std::uint64_t seed = 1;
    std::vector<BoundVariant> variants{BoundVariant::Generic};
};

std::vector<ConvolutionSweep> convolution_sweep(const BoxGrid& grid, const SweepSpec& spec);

// The modulation and frequency families for 3 or 4 functions, with ranges sized for one core.
// top_scale caps the frequency index of the "-freq" family (modulation families are fixed).
std::vector<SweepSpec> standard_sweeps(int arity, int samples, std::uint64_t seed,
                                       std::vector<BoundVariant> variants, int top_scale = 8);

using QuadSymbol = std::function<cplx(long, long, long, long)>;

// int_0^T sum_{xi1+..+xi4=0, xi_i != 0} phi(xi) u1(xi1) u2(xi2) u3(xi3) u4(xi4) dt
// with trapezoidal weights in t; values between samples are linearly interpolated.
cplx s_phi(std::span<const double> times, std::span<const SpectralField> u1,
           std::span<const SpectralField> u2, std::span<const SpectralField> u3,
           std::span<const SpectralField> u4, const QuadSymbol& phi, double T);
cplx s_phi(std::span<const double> times, std::span<const SpectralField> u, const QuadSymbol& phi,
           double T);
// Sum at one time slice.
cplx quadrilinear_sum(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                      const SpectralField& u4, const QuadSymbol& phi);

} // namespace dgbo
