#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "dgbo/error.hpp"
#include "dgbo/littlewood_paley.hpp"
#include "dgbo/parallel.hpp"
#include "dgbo/resonance.hpp"

namespace dgbo {

double ls_slope(std::span<const double> x, std::span<const double> y) {
    require(x.size() == y.size(), ErrorKind::Domain, "slope needs paired samples");
    if (x.size() < 2) return 0.0;
    double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxx == 0.0 ? 0.0 : sxy / sxx;
}

std::string case_name(const BoundCase& c) {
    switch (c.id) {
    case CaseId::ResonanceAsymptotic: return "resonance";
    case CaseId::InvResonanceDiff: return "inv-resonance";
    case CaseId::SigmaJ: return "sigma" + std::to_string(c.j);
    case CaseId::MFamily: return "m" + std::to_string(c.j);
    case CaseId::AFamily: return "a" + std::to_string(c.j);
    case CaseId::APrimeFamily: return "aprime" + std::to_string(c.j);
    case CaseId::NuSymbol: return "nu";
    }
    return "unknown";
}

BoundCase parse_case(const std::string& id) {
    BoundCase c;
    auto member = [&](const std::string& prefix, int hi) {
        if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return 0;
        std::string rest = id.substr(prefix.size());
        if (rest.size() != 1 || rest[0] < '1' || rest[0] > '0' + hi) return 0;
        return rest[0] - '0';
    };
    if (id == "resonance") c.id = CaseId::ResonanceAsymptotic;
    else if (id == "inv-resonance") c.id = CaseId::InvResonanceDiff;
    else if (id == "nu") c.id = CaseId::NuSymbol;
    else if (int j = member("sigma", 3)) c.id = CaseId::SigmaJ, c.j = j;
    else if (int j = member("aprime", 3)) c.id = CaseId::APrimeFamily, c.j = j;
    else if (int j = member("m", 5)) c.id = CaseId::MFamily, c.j = j;
    else if (int j = member("a", 3)) c.id = CaseId::AFamily, c.j = j;
    else fail(ErrorKind::Config, "unknown bound case '" + id + "'");
    return c;
}

std::complex<double> symbol_eval(const BoundCase& c, const Scales& k, std::span<const long> f) {
    const DispersionSpec disp = DispersionSpec::fractional(c.alpha);
    bool triple = c.id == CaseId::SigmaJ || c.id == CaseId::NuSymbol ||
                  c.id == CaseId::ResonanceAsymptotic;
    require(f.size() == (triple ? 3u : 4u), ErrorKind::Domain, "wrong number of frequencies");
    switch (c.id) {
    case CaseId::ResonanceAsymptotic: return resonance(disp, FrequencyTriple(f[0], f[1], f[2]));
    case CaseId::SigmaJ: return sigma_part(c.j, k, f[0], f[1], f[2]);
    case CaseId::NuSymbol: return nu(k, f[0], f[1], f[2]);
    case CaseId::InvResonanceDiff: return inv_resonance_gap(disp, f[0], f[1], f[2], f[3]);
    case CaseId::MFamily: return m_part(c.j, disp, k, f[0], f[1], f[2], f[3]);
    case CaseId::AFamily: return a_part(c.j, disp, k, f[0], f[1], f[2], f[3]);
    case CaseId::APrimeFamily: return a_prime_part(c.j, disp, k, f[0], f[1], f[2], f[3]);
    }
    return 0.0;
}

namespace {

// Integers in the support of chi_k.
std::vector<long> support(int k) {
    std::vector<long> out;
    if (k == 0) return {-1, 1};
    long hi = static_cast<long>(std::ceil(std::ldexp(1.6, k)));
    for (long x = -hi; x <= hi; ++x)
        if (x != 0 && chi_k(k, static_cast<double>(x)) > 0.0) out.push_back(x);
    return out;
}

const std::vector<long>& cached_support(int k) {
    static thread_local std::vector<std::vector<long>> cache(20);
    require(k >= 0 && k < 20, ErrorKind::Resource, "dyadic label out of range");
    if (cache[k].empty()) cache[k] = support(k);
    return cache[k];
}

bool in_support(int k, long x) { return x != 0 && chi_k(k, static_cast<double>(x)) > 0.0; }

// One block of label choices at a fixed principal scale.
struct Stratum {
    Scales k;
    // Labels of the three free slots and of the derived slot.
    std::array<int, 3> free_labels;
    int derived_label;
};

// Slot layout: which frequency positions are free and which one is derived by the zero sum.
struct Layout {
    int arity;                  // 3 or 4 frequencies
    std::array<int, 3> free;    // positions of free slots (the third unused for arity 3)
    int derived;
};

Layout layout_of(CaseId id) {
    switch (id) {
    case CaseId::SigmaJ:
    case CaseId::NuSymbol: return {3, {0, 2, -1}, 1};         // free x1, x3; derived x2
    case CaseId::APrimeFamily: return {4, {2, 0, 3}, 1};       // free x2, xa, x3; derived xb
    default: return {4, {2, 1, 3}, 0};                         // free x2, xb, x3; derived xa
    }
}

std::vector<Stratum> strata(const BoundCase& c, int K) {
    std::vector<Stratum> out;
    auto near = [K](int k) { return k >= 0 && std::abs(k - K) < 3; };
    switch (c.id) {
    case CaseId::SigmaJ:
    case CaseId::NuSymbol:
        for (int k2 = K - 2; k2 <= K + 2; ++k2) {
            if (!near(k2)) continue;
            for (int k3 = 0; k3 <= std::min(K, k2) - 3; ++k3) {
                Scales s{K, k2, k3, 0, 0};
                out.push_back({s, {K, k3, 0}, k2});
            }
        }
        break;
    case CaseId::InvResonanceDiff:
        for (int ka = K - 2; ka <= K + 2; ++ka) {
            if (!near(ka)) continue;
            for (int k3 = 0; k3 <= std::min(K, ka) - 3; ++k3)
                for (int kb = 0; kb <= K + 2; ++kb) {
                    Scales s{K, K, k3, ka, kb};
                    out.push_back({s, {K, kb, k3}, ka});
                }
        }
        break;
    case CaseId::MFamily:
    case CaseId::AFamily:
        for (int k1 = K - 2; k1 <= K + 2; ++k1) {
            if (!near(k1)) continue;
            for (int ka = K - 2; ka <= K + 2; ++ka) {
                if (!near(ka)) continue;
                for (int kb = 0; kb <= K - 3; ++kb)
                    for (int k3 = 0; k3 <= K - 3; ++k3) {
                        Scales s{k1, K, k3, ka, kb};
                        out.push_back({s, {K, kb, k3}, ka});
                    }
            }
        }
        break;
    case CaseId::APrimeFamily:
        for (int k1 = K - 2; k1 <= K + 2; ++k1) {
            if (!near(k1)) continue;
            for (int kb = K - 2; kb <= K + 2; ++kb) {
                if (!near(kb)) continue;
                for (int ka = 0; ka <= K - 3; ++ka)
                    for (int k3 = 0; k3 <= K - 3; ++k3) {
                        Scales s{k1, K, k3, ka, kb};
                        out.push_back({s, {K, ka, k3}, kb});
                    }
            }
        }
        break;
    case CaseId::ResonanceAsymptotic: break;
    }
    return out;
}

double majorant(const BoundCase& c, const Scales& k, int K) {
    const double a = c.alpha;
    switch (c.id) {
    case CaseId::SigmaJ:
    case CaseId::NuSymbol: return std::exp2(k.k3);
    case CaseId::InvResonanceDiff: return std::exp2(-K * (1.0 + a) - k.k3 + k.kb);
    case CaseId::MFamily:
    case CaseId::AFamily: return std::exp2(std::max(k.k3, k.kb) - K * a);
    case CaseId::APrimeFamily: return std::exp2(std::max(k.k3, k.ka) - K * a);
    case CaseId::ResonanceAsymptotic: break;
    }
    return 1.0;
}

struct Partial {
    double max_ratio = 0.0;
    double min_ratio = std::numeric_limits<double>::infinity();
    std::vector<long> argmax;
    Scales argmax_scales;
    std::uint64_t tuples = 0;
    bool subsampled = false;
};

void absorb(Partial& into, const Partial& p) {
    if (p.tuples > 0 && (into.argmax.empty() || p.max_ratio > into.max_ratio)) {
        into.max_ratio = p.max_ratio;
        into.argmax = p.argmax;
        into.argmax_scales = p.argmax_scales;
    }
    into.min_ratio = std::min(into.min_ratio, p.min_ratio);
    into.tuples += p.tuples;
    into.subsampled = into.subsampled || p.subsampled;
}

Partial scan_stratum(const BoundCase& c, const Layout& lay, const Stratum& st, int K,
                     std::uint64_t quota, std::uint64_t seed) {
    Partial part;
    const int nfree = lay.arity - 1;
    std::array<const std::vector<long>*, 3> sets{};
    std::uint64_t total = 1;
    for (int i = 0; i < nfree; ++i) {
        sets[i] = &cached_support(st.free_labels[i]);
        total *= sets[i]->size();
    }
    const double maj = majorant(c, st.k, K);
    std::array<long, 4> f{};
    auto visit = [&](std::array<std::size_t, 3> idx) {
        long sum = 0;
        for (int i = 0; i < nfree; ++i) {
            f[lay.free[i]] = (*sets[i])[idx[i]];
            sum += f[lay.free[i]];
        }
        f[lay.derived] = -sum;
        if (!in_support(st.derived_label, f[lay.derived])) return;
        ++part.tuples;
        double v = std::abs(symbol_eval(c, st.k, std::span<const long>(f.data(), lay.arity)));
        double r = v / maj;
        if (part.argmax.empty() || r > part.max_ratio) {
            part.max_ratio = r;
            part.argmax.assign(f.begin(), f.begin() + lay.arity);
            part.argmax_scales = st.k;
        }
        part.min_ratio = std::min(part.min_ratio, r);
    };
    if (total <= quota) {
        std::array<std::size_t, 3> idx{0, 0, 0};
        std::array<std::size_t, 3> size{1, 1, 1};
        for (int i = 0; i < nfree; ++i) size[i] = sets[i]->size();
        for (idx[0] = 0; idx[0] < size[0]; ++idx[0])
            for (idx[1] = 0; idx[1] < size[1]; ++idx[1])
                for (idx[2] = 0; idx[2] < size[2]; ++idx[2]) visit(idx);
        return part;
    }
    require(c.allow_subsample, ErrorKind::Resource,
            "tuple budget exceeded at scale " + std::to_string(K) + " and subsampling is disabled");
    part.subsampled = true;
    std::mt19937_64 rng(seed);
    for (std::uint64_t n = 0; n < quota; ++n) {
        std::array<std::size_t, 3> idx{0, 0, 0};
        for (int i = 0; i < nfree; ++i) idx[i] = rng() % sets[i]->size();
        visit(idx);
    }
    return part;
}

ConstantReport resonance_window(const BoundCase& c) {
    const DispersionSpec disp = DispersionSpec::fractional(c.alpha);
    const long box = 1L << c.k_max;
    std::vector<double> om(static_cast<std::size_t>(box) + 1);
    for (long n = 0; n <= box; ++n) om[n] = disp(static_cast<double>(n));
    ConstantReport rep;
    rep.case_id = case_name(c);
    rep.alpha = c.alpha;
    rep.seed = c.seed;
    rep.min_ratio = std::numeric_limits<double>::infinity();
    std::vector<ScaleStat> stats(static_cast<std::size_t>(c.k_max) + 1);
    for (int k = 0; k <= c.k_max; ++k) {
        stats[k].scale = k;
        stats[k].min_ratio = std::numeric_limits<double>::infinity();
    }
    // Canonical representatives (p, q, -(p+q)), p >= q >= 1, of all nonzero zero-sum triples.
    for (long q = 1; 2 * q <= box; ++q) {
        for (long p = q; p + q <= box; ++p) {
            long top = p + q;
            double ratio = std::abs(om[p] + om[q] - om[top]) /
                           (std::pow(static_cast<double>(top), c.alpha) * static_cast<double>(q));
            int k = static_cast<int>(std::floor(std::log2(static_cast<double>(top))));
            k = std::min(k, c.k_max);
            ScaleStat& st = stats[k];
            st.max_ratio = std::max(st.max_ratio, ratio);
            st.min_ratio = std::min(st.min_ratio, ratio);
            ++st.tuples;
            ++rep.tuples;
            if (ratio > rep.max_ratio) {
                rep.max_ratio = ratio;
                rep.argmax = {p, q, -top};
            }
            rep.min_ratio = std::min(rep.min_ratio, ratio);
        }
    }
    for (const auto& st : stats)
        if (st.tuples > 0) rep.per_scale.push_back(st);
    return rep;
}

void finish_trend(ConstantReport& rep) {
    std::vector<double> xs, ys;
    for (const auto& st : rep.per_scale) {
        if (st.max_ratio > 0.0) {
            xs.push_back(st.scale);
            ys.push_back(std::log(st.max_ratio));
        }
    }
    rep.slope = ls_slope(xs, ys);
    if (rep.per_scale.size() >= 2) {
        double a = rep.per_scale[rep.per_scale.size() - 1].max_ratio;
        double b = rep.per_scale[rep.per_scale.size() - 2].max_ratio;
        double m = std::max(a, b);
        rep.stability_delta = m == 0.0 ? 0.0 : std::abs(a - b) / m;
    }
}

} // namespace

ConstantReport worst_constant(const BoundCase& c) {
    require(c.k_max >= 0 && c.k_max <= 14, ErrorKind::Resource, "scale cap exceeds 14");
    if (c.id == CaseId::ResonanceAsymptotic) {
        ConstantReport rep = resonance_window(c);
        finish_trend(rep);
        return rep;
    }
    const Layout lay = layout_of(c.id);
    ConstantReport rep;
    rep.case_id = case_name(c);
    rep.alpha = c.alpha;
    rep.seed = c.seed;
    rep.min_ratio = std::numeric_limits<double>::infinity();
    int k_lo = std::max(c.k_min, 3);
    int scales = std::max(1, c.k_max - k_lo + 1);
    std::uint64_t per_scale_budget = std::max<std::uint64_t>(1, c.budget / scales);
    Partial all;
    for (int K = k_lo; K <= c.k_max; ++K) {
        std::vector<Stratum> blocks = strata(c, K);
        if (blocks.empty()) continue;
        std::uint64_t quota = std::max<std::uint64_t>(1, per_scale_budget / blocks.size());
        std::vector<Partial> parts(blocks.size());
        parallel_for(blocks.size(), [&](std::size_t i) {
            std::uint64_t seed = c.seed * 0x9E3779B97F4A7C15ULL + (static_cast<std::uint64_t>(K) << 32) + i;
            parts[i] = scan_stratum(c, lay, blocks[i], K, quota, seed);
        });
        Partial scale;
        for (const auto& p : parts) absorb(scale, p);
        ScaleStat st;
        st.scale = K;
        st.max_ratio = scale.max_ratio;
        st.min_ratio = scale.tuples ? scale.min_ratio : 0.0;
        st.tuples = scale.tuples;
        rep.per_scale.push_back(st);
        absorb(all, scale);
    }
    rep.max_ratio = all.max_ratio;
    rep.min_ratio = all.tuples ? all.min_ratio : 0.0;
    rep.argmax = all.argmax;
    rep.argmax_scales = all.argmax_scales;
    rep.tuples = all.tuples;
    rep.subsampled = all.subsampled;
    finish_trend(rep);
    return rep;
}

} // namespace dgbo
