#include <algorithm>
#include <cmath>

#include "dgbo/error.hpp"
#include "dgbo/littlewood_paley.hpp"
#include "dgbo/resonance.hpp"

namespace dgbo {

using cd = std::complex<double>;

namespace {

constexpr cd I{0.0, 1.0};

double c(int k, long x) { return chi_k(k, static_cast<double>(x)); }
double d(long x) { return static_cast<double>(x); }

double checked_resonance(const DispersionSpec& s, long a, long b, long e) {
    require(a != 0 && b != 0 && e != 0, ErrorKind::Domain,
            "resonance needs nonzero frequencies, got (" + std::to_string(a) + "," +
                std::to_string(b) + "," + std::to_string(e) + ")");
    double r = resonance_unchecked(s, d(a), d(b), d(e));
    require(r != 0.0, ErrorKind::Domain, "resonance vanishes");
    return r;
}

void require_zero_sum(long a, long b, long e, long f) {
    require(a + b + e + f == 0, ErrorKind::Domain, "frequencies must sum to zero");
}

} // namespace

FrequencyTriple::FrequencyTriple(long xi1, long xi2, long xi3) : v_{xi1, xi2, xi3} {
    require(xi1 + xi2 + xi3 == 0, ErrorKind::Domain, "triple must sum to zero");
    require(xi1 != 0 && xi2 != 0 && xi3 != 0, ErrorKind::Domain, "triple entries must be nonzero");
}

std::array<long, 3> FrequencyTriple::ordered_magnitudes() const {
    std::array<long, 3> m{std::abs(v_[0]), std::abs(v_[1]), std::abs(v_[2])};
    std::sort(m.begin(), m.end(), std::greater<>());
    return m;
}

double resonance_unchecked(const DispersionSpec& spec, double a, double b, double e) {
    return spec(a) + spec(b) + spec(e);
}

double resonance(const DispersionSpec& spec, const FrequencyTriple& t) {
    return resonance_unchecked(spec, d(t.xi1()), d(t.xi2()), d(t.xi3()));
}

double inv_resonance_gap(const DispersionSpec& s, long xa, long xb, long x2, long x3) {
    require_zero_sum(xa, xb, x2, x3);
    double first = checked_resonance(s, xa, x2 + xb, x3);
    double second = checked_resonance(s, xa + xb, x2, x3);
    return std::abs(1.0 / first - 1.0 / second);
}

double inv_resonance_gap(double alpha, long xa, long xb, long x2, long x3) {
    return inv_resonance_gap(DispersionSpec::fractional(alpha), xa, xb, x2, x3);
}

cd sigma(const Scales& k, long x1, long x2, long x3) {
    require(x1 + x2 + x3 == 0, ErrorKind::Domain, "frequencies must sum to zero");
    double a = c(k.k1, x1);
    return I * d(x1) * a * a * c(k.k2, x2) * c(k.k3, x3);
}

cd sigma_part(int j, const Scales& k, long x1, long x2, long x3) {
    require(x1 + x2 + x3 == 0, ErrorKind::Domain, "frequencies must sum to zero");
    double a1 = c(k.k1, x1), a2 = c(k.k1, x2);
    double low = c(k.k3, x3);
    switch (j) {
    case 1: return -I * d(x3) * a1 * a1 * c(k.k2, x2) * low;
    case 2: return -I * d(x2) * (a1 * a1 - a2 * a2) * c(k.k2, x2) * low;
    case 3: return -I * d(x2) * a2 * a2 * (c(k.k2, x2) - c(k.k2, x1)) * low;
    default: fail(ErrorKind::Domain, "sigma piece index must be 1, 2 or 3");
    }
}

double nu(const Scales& k, long x1, long x2, long x3) {
    require(x1 + x2 + x3 == 0, ErrorKind::Domain, "frequencies must sum to zero");
    return d(x2) * c(k.k1, x1) * (c(k.k1, x2 + x3) - c(k.k1, x2)) * c(k.k3, x3);
}

namespace {

cd m_tail(const Scales& k, long xb, long x3) { return -I * d(x3) * c(k.k3, x3) * c(k.kb, xb); }

} // namespace

cd m_symbol(const DispersionSpec& s, const Scales& k, long xa, long xb, long x2, long x3) {
    require_zero_sum(xa, xb, x2, x3);
    long xab = xa + xb;
    double q = c(k.k1, xab);
    double om = checked_resonance(s, xab, x2, x3);
    return -I * d(xab) * q * q * c(k.ka, xa) * c(k.k2, x2) / om * m_tail(k, xb, x3);
}

cd m_part(int j, const DispersionSpec& s, const Scales& k, long xa, long xb, long x2, long x3) {
    require_zero_sum(xa, xb, x2, x3);
    long xab = xa + xb, x2b = x2 + xb;
    double qab = c(k.k1, xab), q2b = c(k.k1, x2b);
    double qab2 = qab * qab, q2b2 = q2b * q2b;
    double om = checked_resonance(s, xab, x2, x3);
    cd t = m_tail(k, xb, x3);
    switch (j) {
    case 1: return I * d(x3 - xb) * qab2 * c(k.ka, xa) * c(k.k2, x2) / om * t;
    case 2: return I * d(x2b) * (qab2 - q2b2) * c(k.ka, xa) * c(k.k2, x2) / om * t;
    case 3: return I * d(x2b) * q2b2 * (c(k.ka, xa) - c(k.ka, x2)) * c(k.k2, x2) / om * t;
    case 4: return I * d(x2b) * q2b2 * c(k.ka, x2) * (c(k.k2, x2) - c(k.k2, xa)) / om * t;
    case 5: {
        double om2 = checked_resonance(s, x2b, xa, x3);
        return I * d(x2b) * q2b2 * c(k.ka, x2) * c(k.k2, xa) * (1.0 / om - 1.0 / om2) * t;
    }
    case 6: {
        double om2 = checked_resonance(s, x2b, xa, x3);
        return I * d(x2b) * q2b2 * c(k.ka, x2) * c(k.k2, xa) / om2 * t;
    }
    default: fail(ErrorKind::Domain, "m piece index must lie in 1..6");
    }
}

double a_combination(const DispersionSpec& s, const Scales& k, long xa, long xb, long x2, long x3) {
    require_zero_sum(xa, xb, x2, x3);
    long xab = xa + xb, x2b = x2 + xb;
    return d(xab) * nu(k, xab, x2, x3) / checked_resonance(s, xab, x2, x3) +
           d(x2b) * nu(k, xa, x2b, x3) / checked_resonance(s, xa, x2b, x3);
}

double a_part(int i, const DispersionSpec& s, const Scales& k, long xa, long xb, long x2, long x3) {
    require_zero_sum(xa, xb, x2, x3);
    long xab = xa + xb, x2b = x2 + xb;
    double om = checked_resonance(s, xab, x2, x3);
    double n1 = nu(k, xab, x2, x3);
    switch (i) {
    case 1: return d(xab + x2b) * n1 / om;
    case 2: return (nu(k, xa, x2b, x3) - n1) * d(x2b) / om;
    case 3: {
        double om2 = checked_resonance(s, xa, x2b, x3);
        return (1.0 / om2 - 1.0 / om) * d(x2b) * nu(k, xa, x2b, x3);
    }
    default: fail(ErrorKind::Domain, "A piece index must lie in 1..3");
    }
}

double a_prime_combination(const DispersionSpec& s, const Scales& k, long xa, long xb, long x2,
                           long x3) {
    require_zero_sum(xa, xb, x2, x3);
    long xab = xa + xb, xa2 = xa + x2;
    return d(xab) * nu(k, xab, x2, x3) / checked_resonance(s, xab, x2, x3) +
           d(xa2) * nu(k, xb, xa2, x3) / checked_resonance(s, xb, xa2, x3);
}

double a_prime_part(int i, const DispersionSpec& s, const Scales& k, long xa, long xb, long x2,
                    long x3) {
    require_zero_sum(xa, xb, x2, x3);
    long xab = xa + xb, xa2 = xa + x2;
    double om = checked_resonance(s, xab, x2, x3);
    double n1 = nu(k, xab, x2, x3);
    switch (i) {
    case 1: return d(xab + xa2) * n1 / om;
    case 2: return d(xa2) * (nu(k, xb, xa2, x3) - n1) / om;
    case 3: {
        double om2 = checked_resonance(s, xb, xa2, x3);
        return d(xa2) * nu(k, xb, xa2, x3) * (1.0 / om2 - 1.0 / om);
    }
    default: fail(ErrorKind::Domain, "A' piece index must lie in 1..3");
    }
}

} // namespace dgbo
