#pragma once

// Fractional derivative operators in physical space (Grunwald-Letnikov sums,
// the Riemann-Liouville half-derivative as a differentiated Abel integral)
// and their Fourier/Laplace symbols.
//
// All fractional powers of complex quantities take the principal branch,
// arg in (-pi, pi].

#include <complex>
#include <functional>
#include <vector>

#include "fracwave/grid.hpp"

namespace fracwave {

// Spatial order alpha in (0, 2].
struct FractionalOrder {
  double alpha;
  explicit FractionalOrder(double a);
};

// Weights (p, q) with p + q = 1 splitting the operator between forward and
// backward derivatives; p is the asymptotic fraction of positive jumps.
struct AsymmetryWeights {
  double p;
  double q;
  AsymmetryWeights(double p_, double q_);
  bool symmetric() const { return p == q; }
};

// Temporal order beta in (0, 1].
struct TimeOrder {
  double beta;
  explicit TimeOrder(double b);
};

namespace fracops {

// Grunwald-Letnikov derivative with lower terminal at the grid's left
// endpoint: D^a f(x_j) = h^{-a} sum_{m<=j} w_m f(x_{j-m}),
// w_0 = 1, w_m = w_{m-1} (m - 1 - a)/m.  Requires alpha in (0, 1].
SampledFunction gl_derivative(const SampledFunction& f, const FractionalOrder& order);

// GL binomial weights w_0..w_{count-1} for order alpha.
std::vector<double> gl_weights(double alpha, std::size_t count);

// Riemann-Liouville half-derivative
//   D^{1/2} f(z) = (1/sqrt(pi)) d/dz int_{z0}^{z} f(zeta) dzeta / sqrt(z - zeta),
// with the derivative applied numerically (central difference, step
// 1e-5 * max(1, z)) outside the Abel integral.
double rl_half_derivative(const std::function<double(double)>& f, double z, double z0 = 0.0);

// Abel integral int_{z0}^{z} f(zeta)/sqrt(z - zeta) dzeta (exposed for tests).
double abel_integral(const std::function<double(double)>& f, double z, double z0);

// Symbol of the symmetric Riesz operator: -|k|^alpha.
double riesz_symbol(double k, const FractionalOrder& order);

// Symbol p(-ik)^alpha + q(ik)^alpha of the asymmetric operator.
// Rejects (alpha == 1, p == q), where the combination degenerates to zero;
// the symmetric alpha = 1 case belongs to riesz_symbol.
std::complex<double> asymmetric_symbol(double k, const FractionalOrder& order,
                                       const AsymmetryWeights& w);

// Symbol of the fractional Laplacian: -||k||^alpha.
double laplacian_symbol(const std::vector<double>& kvec, const FractionalOrder& order);

// Coupled space-time symbol (s + k^2)^beta, Re(s) > 0.
std::complex<double> coupled_symbol(std::complex<double> s, double k, const TimeOrder& order);

}  // namespace fracops
}  // namespace fracwave
