#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dgbo/dispersion.hpp"

namespace dgbo {

class FrequencyTriple {
public:
    FrequencyTriple(long xi1, long xi2, long xi3);
    long xi1() const { return v_[0]; }
    long xi2() const { return v_[1]; }
    long xi3() const { return v_[2]; }
    // |xi1*| >= |xi2*| >= |xi3*|
    std::array<long, 3> ordered_magnitudes() const;

private:
    std::array<long, 3> v_;
};

// Omega = omega(xi1) + omega(xi2) + omega(xi3)
double resonance(const DispersionSpec& spec, const FrequencyTriple& t);
// Unchecked variant used in inner loops.
double resonance_unchecked(const DispersionSpec& spec, double a, double b, double c);

// |1/Omega(xa, x2+xb, x3) - 1/Omega(xa+xb, x2, x3)| for the fractional relation.
double inv_resonance_gap(double alpha, long xa, long xb, long x2, long x3);
double inv_resonance_gap(const DispersionSpec& spec, long xa, long xb, long x2, long x3);

// Dyadic labels for the symbol families. Unused labels are ignored.
struct Scales {
    int k1 = 0, k2 = 0, k3 = 0, ka = 0, kb = 0;
};

// sigma(x1,x2,x3) = i x1 chi_{k1}^2(x1) chi_{k2}(x2) chi_{k3}(x3)
std::complex<double> sigma(const Scales& k, long x1, long x2, long x3);
// Pieces of sigma(x1,x2,x3) + sigma(x2,x1,x3), j = 1..3.
std::complex<double> sigma_part(int j, const Scales& k, long x1, long x2, long x3);
// nu(x1,x2,x3) = x2 chi_{k1}(x1) [chi_{k1}(x2+x3) - chi_{k1}(x2)] chi_{k3}(x3)
double nu(const Scales& k, long x1, long x2, long x3);

// m(xa,xb,x2,x3) = (-i xab) chi_{k1}^2(xab) chi_{ka}(xa) chi_{k2}(x2) / Omega(xab,x2,x3)
//                  * (-i x3) chi_{k3}(x3) chi_{kb}(xb)
std::complex<double> m_symbol(const DispersionSpec& d, const Scales& k, long xa, long xb, long x2,
                              long x3);
// Pieces j = 1..6 of m; sum of the first five equals m(xa,xb,x2,x3) + m(x2,xb,xa,x3).
std::complex<double> m_part(int j, const DispersionSpec& d, const Scales& k, long xa, long xb,
                            long x2, long x3);

// xab (nu/Omega)(xab,x2,x3) + x2b (nu/Omega)(xa,x2b,x3) and its pieces i = 1..3.
double a_combination(const DispersionSpec& d, const Scales& k, long xa, long xb, long x2, long x3);
double a_part(int i, const DispersionSpec& d, const Scales& k, long xa, long xb, long x2, long x3);
// xab (nu/Omega)(xab,x2,x3) + xa2 (nu/Omega)(xb,x2a,x3) and its pieces i = 1..3.
double a_prime_combination(const DispersionSpec& d, const Scales& k, long xa, long xb, long x2,
                           long x3);
double a_prime_part(int i, const DispersionSpec& d, const Scales& k, long xa, long xb, long x2,
                    long x3);

enum class CaseId {
    ResonanceAsymptotic,
    InvResonanceDiff,
    SigmaJ,
    MFamily,
    AFamily,
    APrimeFamily,
    NuSymbol
};

struct BoundCase {
    CaseId id = CaseId::SigmaJ;
    int j = 1;          // family member where applicable
    double alpha = 0.5;
    int k_min = 3;      // smallest principal scale scanned
    int k_max = 8;      // largest principal scale scanned
    std::uint64_t budget = 10'000'000;
    bool allow_subsample = true;
    std::uint64_t seed = 1;
};

std::string case_name(const BoundCase& c);
// Parses identifiers like "sigma2", "m5", "a1", "aprime3", "nu", "inv-resonance", "resonance".
BoundCase parse_case(const std::string& id);

// Evaluate the symbol belonging to a case. Frequencies: 3 entries (x1,x2,x3) for SigmaJ/Nu/Resonance,
// 4 entries (xa,xb,x2,x3) otherwise.
std::complex<double> symbol_eval(const BoundCase& c, const Scales& k, std::span<const long> freqs);

struct ScaleStat {
    int scale = 0;
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    std::uint64_t tuples = 0;
};

struct ConstantReport {
    std::string case_id;
    double alpha = 0.0;
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    std::vector<long> argmax;
    Scales argmax_scales;
    std::vector<ScaleStat> per_scale;
    double stability_delta = 0.0;  // relative change of the max between the two largest scales
    double slope = 0.0;            // least-squares slope of log(max ratio) against scale
    std::uint64_t tuples = 0;
    bool subsampled = false;
    std::uint64_t seed = 0;
};

ConstantReport worst_constant(const BoundCase& c);

// Least-squares slope of y against x.
double ls_slope(std::span<const double> x, std::span<const double> y);

} // namespace dgbo
