#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "dgbo/error.hpp"

namespace dgbo {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform grid on R/2piZ. Frequencies live in [-N/2, N/2).
class TorusGrid {
public:
    explicit TorusGrid(int n_points);

    int n_points() const { return n_; }
    int dealias_cutoff() const { return n_ / 3; }
    static constexpr double length() { return kTwoPi; }
    int max_frequency() const { return n_ / 2 - 1; }

    // Position of frequency xi in FFT ordering.
    std::size_t index(long xi) const;
    long frequency(std::size_t i) const;
    bool resolves(long xi) const { return xi > -n_ / 2 && xi < n_ / 2; }
    double x(std::size_t j) const { return kTwoPi * static_cast<double>(j) / n_; }

    bool operator==(const TorusGrid&) const = default;

private:
    int n_;
};

// Fourier coefficients of a real field, u_hat(xi) = int_T u e^{-i x xi} dx.
// Stored in FFT order; the Nyquist slot is always zero.
class SpectralField {
public:
    explicit SpectralField(TorusGrid grid);
    SpectralField(TorusGrid grid, std::vector<cplx> coeffs);

    const TorusGrid& grid() const { return grid_; }
    std::span<const cplx> coeffs() const { return coeffs_; }
    std::span<cplx> coeffs() { return coeffs_; }

    // Coefficient at frequency xi; zero outside the resolved band.
    cplx at(long xi) const;
    // Writes c at xi and conj(c) at -xi.
    void set_mode(long xi, cplx c);

    double max_abs() const;
    bool all_finite() const;
    // max |u_hat(-xi) - conj(u_hat(xi))|
    double hermitian_defect() const;

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double a);

private:
    TorusGrid grid_;
    std::vector<cplx> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double a, SpectralField f);

SpectralField to_spectral(const TorusGrid& grid, std::span<const double> samples);
std::vector<double> from_spectral(const SpectralField& f);
// Samples on a finer uniform grid of m points (m >= n_points).
std::vector<double> sample_on(const SpectralField& f, std::size_t m);

// out(xi) = symbol(xi) * f(xi)
template <class Symbol>
SpectralField apply_multiplier(const SpectralField& f, Symbol&& symbol) {
    SpectralField out(f.grid());
    auto src = f.coeffs();
    auto dst = out.coeffs();
    for (std::size_t i = 0; i < src.size(); ++i) {
        long xi = f.grid().frequency(i);
        if (xi == -f.grid().n_points() / 2) continue;
        cplx m = symbol(xi);
        require(std::isfinite(m.real()) && std::isfinite(m.imag()), ErrorKind::Numeric,
                "multiplier is not finite at xi = " + std::to_string(xi));
        dst[i] = m * src[i];
    }
    return out;
}

// Coefficients of f*g with output modes above the dealias cutoff removed.
SpectralField product_dealiased(const SpectralField& f, const SpectralField& g);
SpectralField square_dealiased(const SpectralField& f);

// Zero every mode with |xi| > cutoff.
SpectralField truncate(const SpectralField& f, long cutoff);
// Copy coefficients onto another grid, dropping unresolved modes.
SpectralField resample(const SpectralField& f, const TorusGrid& target);
// u(. + shift) as a Fourier phase.
SpectralField translate(const SpectralField& f, double shift);

// (1/2pi) sum |u_hat|^2 = ||u||_{L^2}^2
double l2_norm_squared(const SpectralField& f);
double l2_norm(const SpectralField& f);
// int_T u^p dx, computed on a grid fine enough to be exact for trigonometric data.
double integral_power(const SpectralField& f, int p);

} // namespace dgbo
