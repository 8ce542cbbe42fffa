#pragma once

#include <string_view>

#include "dgbo/spectral.hpp"

namespace dgbo {

// Identifier of the concrete cutoff profile, embedded in every output.
inline constexpr std::string_view kBumpProfileId = "exp-ratio-5/4-8/5";

// Smooth monotone transition [0,1] -> [0,1], flat at both ends.
double bump_transition(double t);
// Even cutoff: 1 on [-5/4, 5/4], 0 outside (-8/5, 8/5).
double chi(double xi);

double chi_k(int k, double xi);
double chi_le(int k, double xi);
double chi_gt(int k, double xi);
// Modulation cutoffs: eta_0 = chi, eta_l = chi(2^-l .) - chi(2^{1-l} .).
double eta_l(int l, double x);
// Open support of eta_l: |x| < 8/5 for l = 0, 2^{l-1} 5/4 < |x| < 2^l 8/5 otherwise.
bool in_eta_support(int l, double x);

SpectralField lp_project(const SpectralField& f, int k);
SpectralField lp_project_le(const SpectralField& f, int k);
SpectralField lp_project_gt(const SpectralField& f, int k);

// u_hat(0)^2 + sum_k 2^{2ks} ||P_k u||^2, square-rooted.
double sobolev_norm(const SpectralField& f, double s);

} // namespace dgbo
