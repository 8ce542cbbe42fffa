#include "dgbo/spectral.hpp"

#include <algorithm>

#include "fft.hpp"

namespace dgbo {

TorusGrid::TorusGrid(int n_points) : n_(n_points) {
    require(n_points >= 8 && (n_points & (n_points - 1)) == 0, ErrorKind::Config,
            "n_points must be a power of two >= 8, got " + std::to_string(n_points));
}

std::size_t TorusGrid::index(long xi) const {
    require(xi >= -n_ / 2 && xi < n_ / 2, ErrorKind::Domain,
            "frequency " + std::to_string(xi) + " not resolved on grid");
    return static_cast<std::size_t>(xi >= 0 ? xi : xi + n_);
}

long TorusGrid::frequency(std::size_t i) const {
    long li = static_cast<long>(i);
    return li < n_ / 2 ? li : li - n_;
}

SpectralField::SpectralField(TorusGrid grid)
    : grid_(grid), coeffs_(static_cast<std::size_t>(grid.n_points())) {}

SpectralField::SpectralField(TorusGrid grid, std::vector<cplx> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
    require(coeffs_.size() == static_cast<std::size_t>(grid_.n_points()), ErrorKind::Config,
            "coefficient count does not match grid");
    coeffs_[grid_.index(-grid_.n_points() / 2)] = 0.0;
}

cplx SpectralField::at(long xi) const {
    if (!grid_.resolves(xi)) return 0.0;
    return coeffs_[grid_.index(xi)];
}

void SpectralField::set_mode(long xi, cplx c) {
    require(grid_.resolves(xi), ErrorKind::Domain, "mode " + std::to_string(xi) + " not resolved");
    if (xi == 0) {
        coeffs_[0] = c.real();
        return;
    }
    coeffs_[grid_.index(xi)] = c;
    coeffs_[grid_.index(-xi)] = std::conj(c);
}

double SpectralField::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool SpectralField::all_finite() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const cplx& c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

double SpectralField::hermitian_defect() const {
    double d = std::abs(coeffs_[0].imag());
    for (long xi = 1; xi <= grid_.max_frequency(); ++xi)
        d = std::max(d, std::abs(at(-xi) - std::conj(at(xi))));
    return d;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require(grid_ == o.grid_, ErrorKind::Config, "grid mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require(grid_ == o.grid_, ErrorKind::Config, "grid mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double a) {
    for (auto& c : coeffs_) c *= a;
    return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double a, SpectralField f) { return f *= a; }

namespace {

// Fill a half spectrum of length m/2+1 from f (modes 0..N/2-1).
std::vector<cplx> half_spectrum(const SpectralField& f, std::size_t m) {
    std::vector<cplx> half(m / 2 + 1);
    const long top = f.grid().max_frequency();
    for (long xi = 0; xi <= top && static_cast<std::size_t>(xi) < m / 2; ++xi) half[xi] = f.at(xi);
    half[0] = half[0].real();
    return half;
}

SpectralField from_half(const TorusGrid& grid, const std::vector<cplx>& half, double scale,
                        long cutoff) {
    SpectralField out(grid);
    long top = std::min<long>(cutoff, grid.max_frequency());
    top = std::min<long>(top, static_cast<long>(half.size()) - 1);
    auto c = out.coeffs();
    c[0] = half[0].real() * scale;
    for (long xi = 1; xi <= top; ++xi) {
        cplx v = half[xi] * scale;
        c[grid.index(xi)] = v;
        c[grid.index(-xi)] = std::conj(v);
    }
    return out;
}

} // namespace

SpectralField to_spectral(const TorusGrid& grid, std::span<const double> samples) {
    const std::size_t n = static_cast<std::size_t>(grid.n_points());
    require(samples.size() == n, ErrorKind::Config,
            "expected " + std::to_string(n) + " samples, got " + std::to_string(samples.size()));
    std::vector<cplx> half(n / 2 + 1);
    detail::r2c(n, samples.data(), half.data());
    return from_half(grid, half, kTwoPi / static_cast<double>(n), grid.max_frequency());
}

std::vector<double> sample_on(const SpectralField& f, std::size_t m) {
    require(m >= static_cast<std::size_t>(f.grid().n_points()) && m % 2 == 0, ErrorKind::Config,
            "sampling grid must be even and at least as fine as the field grid");
    std::vector<double> out(m);
    detail::c2r(m, half_spectrum(f, m).data(), out.data());
    for (auto& v : out) v /= kTwoPi;
    return out;
}

std::vector<double> from_spectral(const SpectralField& f) {
    return sample_on(f, static_cast<std::size_t>(f.grid().n_points()));
}

SpectralField product_dealiased(const SpectralField& f, const SpectralField& g) {
    require(f.grid() == g.grid(), ErrorKind::Config, "product of fields on different grids");
    const std::size_t m = 2 * static_cast<std::size_t>(f.grid().n_points());
    std::vector<double> a = sample_on(f, m);
    std::vector<double> b = sample_on(g, m);
    for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
    std::vector<cplx> half(m / 2 + 1);
    detail::r2c(m, a.data(), half.data());
    return from_half(f.grid(), half, kTwoPi / static_cast<double>(m), f.grid().dealias_cutoff());
}

SpectralField square_dealiased(const SpectralField& f) {
    const std::size_t m = 2 * static_cast<std::size_t>(f.grid().n_points());
    std::vector<double> a = sample_on(f, m);
    for (auto& v : a) v *= v;
    std::vector<cplx> half(m / 2 + 1);
    detail::r2c(m, a.data(), half.data());
    return from_half(f.grid(), half, kTwoPi / static_cast<double>(m), f.grid().dealias_cutoff());
}

SpectralField truncate(const SpectralField& f, long cutoff) {
    return apply_multiplier(f, [cutoff](long xi) { return std::abs(xi) <= cutoff ? 1.0 : 0.0; });
}

SpectralField resample(const SpectralField& f, const TorusGrid& target) {
    SpectralField out(target);
    long top = std::min(f.grid().max_frequency(), target.max_frequency());
    out.coeffs()[0] = f.at(0);
    for (long xi = 1; xi <= top; ++xi) out.set_mode(xi, f.at(xi));
    return out;
}

SpectralField translate(const SpectralField& f, double shift) {
    return apply_multiplier(f, [shift](long xi) {
        double ph = static_cast<double>(xi) * shift;
        return cplx(std::cos(ph), std::sin(ph));
    });
}

double l2_norm_squared(const SpectralField& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs()) s += std::norm(c);
    return s / kTwoPi;
}

double l2_norm(const SpectralField& f) { return std::sqrt(l2_norm_squared(f)); }

double integral_power(const SpectralField& f, int p) {
    require(p >= 1, ErrorKind::Domain, "power must be positive");
    std::size_t m = static_cast<std::size_t>(f.grid().n_points());
    while (m <= static_cast<std::size_t>(p) * static_cast<std::size_t>(f.grid().max_frequency()))
        m *= 2;
    std::vector<double> u = sample_on(f, m);
    double s = 0.0;
    for (double v : u) {
        double t = 1.0;
        for (int q = 0; q < p; ++q) t *= v;
        s += t;
    }
    return s * kTwoPi / static_cast<double>(m);
}

} // namespace dgbo
