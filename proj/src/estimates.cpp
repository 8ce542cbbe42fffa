#include "dgbo/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "dgbo/littlewood_paley.hpp"
#include "dgbo/parallel.hpp"
#include "dgbo/resonance.hpp"
#include "fft.hpp"

namespace dgbo {

BoxFunction::BoxFunction(int l, int k, double dtau, std::vector<Column> columns)
    : l_(l), k_(k), dtau_(dtau), columns_(std::move(columns)) {
    require(dtau > 0.0, ErrorKind::Config, "tau spacing must be positive");
    double s = 0.0;
    for (const auto& c : columns_)
        for (double v : c.values) {
            require(v >= 0.0 && std::isfinite(v), ErrorKind::Domain, "box values must be finite and nonnegative");
            s += v * v;
        }
    norm_ = std::sqrt(dtau_ * s);
}

std::size_t BoxFunction::point_count() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.values.size();
    return n;
}

bool BoxFunction::in_box(const BoxGrid& grid) const {
    for (const auto& c : columns_) {
        if (chi_k(k_, static_cast<double>(c.xi)) <= 0.0) {
            for (double v : c.values)
                if (v != 0.0) return false;
            continue;
        }
        double om = grid.dispersion(static_cast<double>(c.xi));
        for (std::size_t i = 0; i < c.values.size(); ++i) {
            if (c.values[i] == 0.0) continue;
            double tau = static_cast<double>(c.start + static_cast<long>(i)) * dtau_;
            if (!in_eta_support(l_, tau - om)) return false;
        }
    }
    return true;
}

BoxFunction BoxFunction::scaled(double lambda) const {
    std::vector<Column> cols = columns_;
    for (auto& c : cols)
        for (auto& v : c.values) v *= lambda;
    return BoxFunction(l_, k_, dtau_, std::move(cols));
}

BoxFunction BoxFunction::shifted_tau(long steps) const {
    std::vector<Column> cols = columns_;
    for (auto& c : cols) c.start += steps;
    return BoxFunction(l_, k_, dtau_, std::move(cols));
}

namespace {

std::vector<long> frequency_support(int k) {
    if (k == 0) return {-1, 1};
    std::vector<long> out;
    long hi = static_cast<long>(std::ceil(std::ldexp(1.6, k)));
    for (long x = -hi; x <= hi; ++x)
        if (x != 0 && chi_k(k, static_cast<double>(x)) > 0.0) out.push_back(x);
    return out;
}

double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

} // namespace

BoxFunction sample_box_function(const BoxGrid& grid, int l, int k, std::uint64_t seed) {
    require(l >= 0 && l <= grid.l_cap, ErrorKind::Resource,
            "modulation index " + std::to_string(l) + " exceeds the grid capacity");
    require(k >= 0 && k <= grid.k_cap, ErrorKind::Resource,
            "frequency index " + std::to_string(k) + " exceeds the grid capacity");
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(l) * 1000003ULL +
                        static_cast<std::uint64_t>(k));
    const double reach = std::ldexp(1.6, l);
    std::vector<BoxFunction::Column> cols;
    std::size_t points = 0;
    for (long xi : frequency_support(k)) {
        double om = grid.dispersion(static_cast<double>(xi));
        double lo = std::max(om - reach, -grid.tau_window);
        double hi = std::min(om + reach, grid.tau_window);
        if (lo > hi) continue;
        long n0 = static_cast<long>(std::ceil(lo / grid.dtau));
        long n1 = static_cast<long>(std::floor(hi / grid.dtau));
        BoxFunction::Column col;
        col.xi = xi;
        std::vector<double> vals;
        vals.reserve(static_cast<std::size_t>(std::max(0L, n1 - n0 + 1)));
        long first = 0;
        for (long n = n0; n <= n1; ++n) {
            double m = static_cast<double>(n) * grid.dtau - om;
            double v = in_eta_support(l, m) ? unit_uniform(rng) : 0.0;
            if (vals.empty() && v == 0.0) continue;
            if (vals.empty()) first = n;
            vals.push_back(v);
        }
        while (!vals.empty() && vals.back() == 0.0) vals.pop_back();
        if (vals.empty()) continue;
        points += vals.size();
        require(points <= grid.max_points, ErrorKind::Resource,
                "box D_{" + std::to_string(l) + "," + std::to_string(k) + "} exceeds the point budget");
        col.start = first;
        col.values = std::move(vals);
        cols.push_back(std::move(col));
    }
    require(points > 0, ErrorKind::Resource,
            "box D_{" + std::to_string(l) + "," + std::to_string(k) + "} has no grid points in the tau window");
    double sq = 0.0;
    for (const auto& c : cols)
        for (double v : c.values) sq += v * v;
    const double inv = 1.0 / std::sqrt(grid.dtau * sq);
    for (auto& c : cols)
        for (auto& v : c.values) v *= inv;
    return BoxFunction(l, k, grid.dtau, std::move(cols));
}

BoxFunction point_mass(const BoxGrid& grid, int l, int k, long tau_index, long xi, double mass) {
    BoxFunction::Column col{xi, tau_index, {mass}};
    BoxFunction f(l, k, grid.dtau, {col});
    require(f.in_box(grid), ErrorKind::Domain, "point mass lies outside D_{l,k}");
    return f;
}

double convolution_majorant(std::span<const BoxFunction> fs, BoundVariant variant, double alpha) {
    const std::size_t n = fs.size();
    require(n == 3 || n == 4, ErrorKind::Config, "convolution needs 3 or 4 functions");
    std::vector<double> ls, ks;
    double prod = 1.0;
    for (const auto& f : fs) {
        ls.push_back(f.l());
        ks.push_back(f.k());
        prod *= f.l2_norm();
    }
    std::sort(ls.begin(), ls.end(), std::greater<>());
    std::sort(ks.begin(), ks.end(), std::greater<>());
    if (variant == BoundVariant::Generic) {
        if (n == 3) return std::exp2(0.5 * (ls[2] + ks[2])) * prod;
        return std::exp2(0.5 * (ls[2] + ls[3] + ks[2] + ks[3])) * prod;
    }
    double gain = std::sqrt(1.0 + std::exp2(ls[2] - alpha * ks[0]));
    if (n == 3) return gain * std::exp2(0.5 * ls[0]) * prod;
    return gain * std::exp2(0.5 * (ls[0] + ls[1] + ks[3])) * prod;
}

namespace {

struct Indexed {
    const BoxFunction* f;
    std::unordered_map<long, std::size_t> by_xi;
    std::vector<std::vector<cplx>> spectra;
};

std::size_t pow2_at_least(std::size_t v) {
    std::size_t m = 1;
    while (m < v) m <<= 1;
    return m;
}

// sum over m_0 + ... + m_{n-1} = S of prod h_i(m_i), by direct summation.
double direct_sum(std::span<const std::vector<double>* const> h, long S) {
    if (h.size() == 3) {
        const auto &a = *h[0], &b = *h[1], &c = *h[2];
        long la = a.size(), lb = b.size(), lc = c.size();
        double s = 0.0;
        for (long i = 0; i < la; ++i) {
            if (a[i] == 0.0) continue;
            long jlo = std::max(0L, S - i - (lc - 1)), jhi = std::min(lb - 1, S - i);
            double t = 0.0;
            for (long j = jlo; j <= jhi; ++j) t += b[j] * c[S - i - j];
            s += a[i] * t;
        }
        return s;
    }
    const auto &a = *h[0], &b = *h[1], &c = *h[2], &d = *h[3];
    long la = a.size(), lb = b.size(), lc = c.size(), ld = d.size();
    double s = 0.0;
    for (long i = 0; i < la; ++i) {
        if (a[i] == 0.0) continue;
        double ti = 0.0;
        for (long j = 0; j < lb && i + j <= S; ++j) {
            if (b[j] == 0.0) continue;
            long r = S - i - j;
            long klo = std::max(0L, r - (ld - 1)), khi = std::min(lc - 1, r);
            double tj = 0.0;
            for (long q = klo; q <= khi; ++q) tj += c[q] * d[r - q];
            ti += b[j] * tj;
        }
        s += a[i] * ti;
    }
    return s;
}

// twiddle[j] = e^{2 pi i j / M}
double spectral_sum(std::span<const std::vector<cplx>* const> H, const std::vector<cplx>& twiddle, long S) {
    const std::size_t M = twiddle.size();
    const std::size_t half = M / 2;
    const std::size_t step = static_cast<std::size_t>(S) % M;
    const cplx* a = H[0]->data();
    const cplx* b = H[1]->data();
    const cplx* c = H[2]->data();
    const cplx* d = H.size() == 4 ? H[3]->data() : nullptr;
    double s = (a[0] * b[0] * c[0] * (d ? d[0] : cplx(1.0))).real();
    std::size_t idx = step;
    double acc = 0.0;
    for (std::size_t q = 1; q < half; ++q) {
        cplx p = a[q] * b[q] * c[q];
        if (d) p *= d[q];
        acc += (p * twiddle[idx]).real();
        idx += step;
        if (idx >= M) idx -= M;
    }
    s += 2.0 * acc;
    s += (a[half] * b[half] * c[half] * (d ? d[half] : cplx(1.0))).real() * ((S % 2 == 0) ? 1.0 : -1.0);
    return s / static_cast<double>(M);
}

ConvolutionReport convolve(std::span<const BoxFunction> in, BoundVariant variant, double alpha,
                           bool parallel) {
    const std::size_t n = in.size();
    require(n == 3 || n == 4, ErrorKind::Config, "convolution needs 3 or 4 functions");
    const double dtau = in[0].dtau();
    for (const auto& f : in)
        require(f.dtau() == dtau, ErrorKind::Config, "box functions live on different tau grids");

    // The function with the most columns is looked up rather than iterated.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return in[a].columns().size() < in[b].columns().size();
    });
    std::vector<Indexed> fs(n);
    std::size_t span_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        fs[i].f = &in[order[i]];
        std::size_t longest = 0;
        const auto& cols = fs[i].f->columns();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            fs[i].by_xi[cols[c].xi] = c;
            longest = std::max(longest, cols[c].values.size());
        }
        span_total += longest;
    }
    const std::size_t M = pow2_at_least(span_total + 1);
    const bool use_fft = M >= 512;
    std::vector<cplx> twiddle;
    if (use_fft) {
        twiddle.resize(M);
        for (std::size_t q = 0; q < M; ++q) {
            double w = kTwoPi * static_cast<double>(q) / static_cast<double>(M);
            twiddle[q] = cplx(std::cos(w), std::sin(w));
        }
        for (auto& ix : fs) {
            const auto& cols = ix.f->columns();
            ix.spectra.resize(cols.size());
            auto body = [&](std::size_t c) {
                std::vector<double> buf(M, 0.0);
                std::copy(cols[c].values.begin(), cols[c].values.end(), buf.begin());
                ix.spectra[c].resize(M / 2 + 1);
                detail::r2c(M, buf.data(), ix.spectra[c].data());
            };
            if (parallel) parallel_for(cols.size(), body);
            else for (std::size_t c = 0; c < cols.size(); ++c) body(c);
        }
    }

    const auto& outer = fs[0].f->columns();
    std::vector<double> partial(outer.size(), 0.0);
    std::vector<std::size_t> counts(outer.size(), 0);
    auto body = [&](std::size_t c0) {
        std::array<std::size_t, 4> col{};
        col[0] = c0;
        double acc = 0.0;
        std::size_t cnt = 0;
        auto finish = [&](long xsum) {
            auto it = fs[n - 1].by_xi.find(-xsum);
            if (it == fs[n - 1].by_xi.end()) return;
            col[n - 1] = it->second;
            long start_sum = 0, reach = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& cc = fs[i].f->columns()[col[i]];
                start_sum += cc.start;
                reach += static_cast<long>(cc.values.size()) - 1;
            }
            long S = -start_sum;
            if (S < 0 || S > reach) return;
            ++cnt;
            if (use_fft) {
                std::array<const std::vector<cplx>*, 4> H{};
                for (std::size_t i = 0; i < n; ++i) H[i] = &fs[i].spectra[col[i]];
                acc += spectral_sum(std::span(H.data(), n), twiddle, S);
            } else {
                std::array<const std::vector<double>*, 4> h{};
                for (std::size_t i = 0; i < n; ++i) h[i] = &fs[i].f->columns()[col[i]].values;
                acc += direct_sum(std::span(h.data(), n), S);
            }
        };
        long x0 = outer[c0].xi;
        const auto& second = fs[1].f->columns();
        for (std::size_t c1 = 0; c1 < second.size(); ++c1) {
            col[1] = c1;
            long x01 = x0 + second[c1].xi;
            if (n == 3) {
                finish(x01);
                continue;
            }
            const auto& third = fs[2].f->columns();
            for (std::size_t c2 = 0; c2 < third.size(); ++c2) {
                col[2] = c2;
                finish(x01 + third[c2].xi);
            }
        }
        partial[c0] = acc;
        counts[c0] = cnt;
    };
    if (parallel) parallel_for(outer.size(), body);
    else for (std::size_t c = 0; c < outer.size(); ++c) body(c);

    ConvolutionReport rep;
    double total = 0.0;
    for (std::size_t c = 0; c < outer.size(); ++c) {
        total += partial[c];
        rep.tuples += counts[c];
    }
    rep.value = std::max(0.0, total) * std::pow(dtau, static_cast<double>(n - 1));
    rep.majorant = convolution_majorant(in, variant, alpha);
    rep.ratio = rep.majorant > 0.0 ? rep.value / rep.majorant : 0.0;
    rep.dtau = dtau;
    return rep;
}

struct FamilyConfig {
    std::vector<int> l, k;
};

FamilyConfig family_config(const SweepSpec& spec, int j, double alpha) {
    const std::string& f = spec.family;
    // modulation tied to the resonance size 2^{alpha j} of a (high, high, low) interaction
    const int lr = static_cast<int>(std::ceil(alpha * j)) + spec.l_fixed;
    if (f == "tri-mod") return {{j, j, j}, {2, 2, 2}};
    if (f == "tri-freq") return {{lr, lr, lr}, {j, j, 0}};
    if (f == "quad-mod") return {{j, j, j, j}, {2, 2, 2, 2}};
    if (f == "quad-freq") return {{lr, lr, lr, lr}, {j, j, 0, 0}};
    fail(ErrorKind::Config, "unknown convolution family '" + f + "'");
}

} // namespace

ConvolutionReport multi_convolution_at_origin(std::span<const BoxFunction> fs, BoundVariant variant,
                                              double alpha) {
    return convolve(fs, variant, alpha, true);
}

std::vector<ConvolutionSweep> convolution_sweep(const BoxGrid& grid, const SweepSpec& spec) {
    require(spec.samples > 0, ErrorKind::Config, "sweep needs at least one sample");
    require(spec.j_min <= spec.j_max, ErrorKind::Config, "empty scale range");
    std::vector<ConvolutionSweep> out;
    for (BoundVariant v : spec.variants) {
        ConvolutionSweep s;
        s.family = spec.family;
        s.variant = v;
        s.alpha = grid.dispersion.alpha();
        out.push_back(s);
    }
    for (int j = spec.j_min; j <= spec.j_max; ++j) {
        FamilyConfig cfg = family_config(spec, j, grid.dispersion.alpha());
        const std::size_t n = cfg.l.size();
        // values[sample][variant]
        std::vector<std::vector<double>> ratios(spec.samples, std::vector<double>(out.size()));
        parallel_for(static_cast<std::size_t>(spec.samples), [&](std::size_t s) {
            std::vector<BoxFunction> fs;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t seed = spec.seed + 7919ULL * (static_cast<std::uint64_t>(j) * 1000ULL + s) +
                                     104729ULL * i;
                fs.push_back(sample_box_function(grid, cfg.l[i], cfg.k[i], seed));
            }
            ConvolutionReport rep = convolve(fs, BoundVariant::Generic, grid.dispersion.alpha(), false);
            for (std::size_t v = 0; v < out.size(); ++v) {
                double maj = convolution_majorant(fs, out[v].variant, grid.dispersion.alpha());
                ratios[s][v] = rep.value / maj;
            }
        });
        for (std::size_t v = 0; v < out.size(); ++v) {
            ConvolutionScale sc;
            sc.scale = j;
            sc.l = cfg.l;
            sc.k = cfg.k;
            sc.samples = spec.samples;
            double sum = 0.0;
            for (int s = 0; s < spec.samples; ++s) {
                sc.max_ratio = std::max(sc.max_ratio, ratios[s][v]);
                sum += ratios[s][v];
            }
            sc.mean_ratio = sum / spec.samples;
            out[v].scales.push_back(sc);
        }
    }
    for (auto& s : out) {
        std::vector<double> xs, ys;
        for (const auto& sc : s.scales)
            if (sc.max_ratio > 0.0) {
                xs.push_back(sc.scale);
                ys.push_back(std::log(sc.max_ratio));
            }
        s.slope = ls_slope(xs, ys);
        s.pass = xs.size() >= 3 && s.slope <= 0.05;
    }
    return out;
}

std::vector<SweepSpec> standard_sweeps(int arity, int samples, std::uint64_t seed,
                                       std::vector<BoundVariant> variants, int top_scale) {
    require(arity == 3 || arity == 4, ErrorKind::Config, "convolution needs 3 or 4 functions");
    require(top_scale >= 6, ErrorKind::Config, "frequency sweep needs a top scale of at least 6");
    SweepSpec mod, freq;
    mod.family = arity == 3 ? "tri-mod" : "quad-mod";
    mod.j_min = 3;
    mod.j_max = arity == 3 ? 12 : 10;
    // below j = 4 the high and low frequencies are not yet separated
    freq.family = arity == 3 ? "tri-freq" : "quad-freq";
    freq.j_min = 4;
    freq.j_max = top_scale;
    freq.l_fixed = 1;
    std::vector<SweepSpec> out{mod, freq};
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].samples = samples;
        out[i].seed = seed + 31 * i;
        out[i].variants = variants;
    }
    return out;
}

cplx quadrilinear_sum(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                      const SpectralField& u4, const QuadSymbol& phi) {
    const TorusGrid& g = u1.grid();
    require(u2.grid() == g && u3.grid() == g && u4.grid() == g, ErrorKind::Config,
            "quadrilinear sum over fields on different grids");
    auto band = [](const SpectralField& u) {
        long b = 0;
        for (long xi = 1; xi <= u.grid().max_frequency(); ++xi)
            if (u.at(xi) != 0.0 || u.at(-xi) != 0.0) b = xi;
        return b;
    };
    const long b1 = band(u1), b2 = band(u2), b3 = band(u3), b4 = band(u4);
    if (b1 == 0 || b2 == 0 || b3 == 0 || b4 == 0) return 0.0;
    const std::size_t n1 = static_cast<std::size_t>(2 * b1 + 1);
    std::vector<cplx> partial(n1);
    parallel_for(n1, [&](std::size_t i) {
        long x1 = static_cast<long>(i) - b1;
        if (x1 == 0) return;
        cplx a1 = u1.at(x1);
        if (a1 == 0.0) return;
        cplx acc = 0.0;
        for (long x2 = -b2; x2 <= b2; ++x2) {
            if (x2 == 0) continue;
            cplx a2 = u2.at(x2);
            if (a2 == 0.0) continue;
            for (long x3 = -b3; x3 <= b3; ++x3) {
                long x4 = -x1 - x2 - x3;
                if (x3 == 0 || x4 == 0 || std::abs(x4) > b4) continue;
                cplx a3 = u3.at(x3);
                cplx a4 = u4.at(x4);
                if (a3 == 0.0 || a4 == 0.0) continue;
                acc += phi(x1, x2, x3, x4) * a2 * a3 * a4;
            }
        }
        partial[i] = a1 * acc;
    });
    cplx total = 0.0;
    for (const auto& p : partial) total += p;
    return total;
}

cplx s_phi(std::span<const double> times, std::span<const SpectralField> u1,
           std::span<const SpectralField> u2, std::span<const SpectralField> u3,
           std::span<const SpectralField> u4, const QuadSymbol& phi, double T) {
    const std::size_t n = times.size();
    require(n >= 1 && u1.size() == n && u2.size() == n && u3.size() == n && u4.size() == n,
            ErrorKind::Config, "trajectory lengths do not match the time grid");
    require(std::abs(times[0]) <= 1e-14, ErrorKind::Domain, "trajectory must start at t = 0");
    for (std::size_t i = 1; i < n; ++i)
        require(times[i] > times[i - 1], ErrorKind::Domain, "trajectory times must increase");
    require(T >= 0.0, ErrorKind::Domain, "horizon must be nonnegative");
    require(T <= times[n - 1] * (1.0 + 1e-12) + 1e-14, ErrorKind::Domain,
            "horizon lies beyond the trajectory");
    if (T == 0.0) return 0.0;
    cplx total = 0.0;
    cplx prev = quadrilinear_sum(u1[0], u2[0], u3[0], u4[0], phi);
    for (std::size_t i = 1; i < n; ++i) {
        cplx cur = quadrilinear_sum(u1[i], u2[i], u3[i], u4[i], phi);
        double t0 = times[i - 1], t1 = times[i];
        if (T <= t1) {
            double theta = (T - t0) / (t1 - t0);
            cplx at_T = prev + theta * (cur - prev);
            total += 0.5 * (T - t0) * (prev + at_T);
            return total;
        }
        total += 0.5 * (t1 - t0) * (prev + cur);
        prev = cur;
    }
    return total;
}

cplx s_phi(std::span<const double> times, std::span<const SpectralField> u, const QuadSymbol& phi,
           double T) {
    return s_phi(times, u, u, u, u, phi, T);
}

} // namespace dgbo
