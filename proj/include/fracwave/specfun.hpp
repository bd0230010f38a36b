#pragma once

// Scalar special functions: Fresnel integrals in the unnormalized t^2
// convention, the complementary complex Fresnel integral E(u), the
// Mittag-Leffler function on its completely monotone branch, and Gamma.
//
// Conventions.  C(x) = int_0^x cos(t^2) dt and S(x) = int_0^x sin(t^2) dt.
// The normalized tables C*(z) = int_0^z cos(pi u^2/2) du relate by
// C(x) = sqrt(pi/2) * C*(x * sqrt(2/pi)), and likewise for S.
//
// All functions here are pure and thread-safe.

#include <complex>
#include <functional>

#include "fracwave/error.hpp"

namespace fracwave::specfun {

struct FresnelCS {
  double c;
  double s;
};

// C(x), S(x).  Odd in x; |error| <= ~1e-13 absolute.
FresnelCS fresnel(double x);

// E(u) = int_u^inf exp(i t^2) dt = (sqrt(pi)/2) e^{i pi/4} - (C(u) + i S(u)).
std::complex<double> fresnel_comp(double u);

// E_beta(z) for beta in (0, 1], z <= 0.  Relative error ~1e-11.
double mittag_leffler(double beta, double z);

// Weighted integral int_0^inf g(r) K_beta(r) dr against the spectral
// density K_beta of E_beta, i.e. E_beta(-x) = int_0^inf e^{-rx} K_beta(r) dr
// (Gorenflo & Mainardi).  Used by the time-fractional solvers to build
// subordinated propagators; mixture(beta, g) with g = exp(-x r) recovers
// mittag_leffler(beta, -x).
double mittag_leffler_mixture(double beta, const std::function<double(double)>& g);

// Gamma(x) away from the poles.
double gamma_fn(double x);

}  // namespace fracwave::specfun
