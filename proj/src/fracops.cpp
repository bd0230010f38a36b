#include "fracwave/fracops.hpp"

#include <cmath>

#include "fracwave/detail/quad.hpp"
#include "fracwave/error.hpp"

namespace fracwave {

FractionalOrder::FractionalOrder(double a) : alpha(a) {
  if (!(a > 0.0 && a <= 2.0))
    throw ParameterError("FractionalOrder: alpha must lie in (0, 2]");
}

AsymmetryWeights::AsymmetryWeights(double p_, double q_) : p(p_), q(q_) {
  if (!(p >= 0.0 && q >= 0.0) || std::abs(p + q - 1.0) > 1e-12)
    throw ParameterError("AsymmetryWeights: need p, q >= 0 with p + q = 1");
}

TimeOrder::TimeOrder(double b) : beta(b) {
  if (!(b > 0.0 && b <= 1.0))
    throw ParameterError("TimeOrder: beta must lie in (0, 1]");
}

namespace fracops {

std::vector<double> gl_weights(double alpha, std::size_t count) {
  std::vector<double> w(count);
  if (count == 0) return w;
  w[0] = 1.0;
  for (std::size_t m = 1; m < count; ++m)
    w[m] = w[m - 1] * (static_cast<double>(m) - 1.0 - alpha) / static_cast<double>(m);
  return w;
}

SampledFunction gl_derivative(const SampledFunction& f, const FractionalOrder& order) {
  if (order.alpha > 1.0)
    throw ParameterError("gl_derivative: implemented for alpha in (0, 1]");
  const std::size_t n = f.grid.size();
  const double h = f.grid.dx();
  const std::vector<double> w = gl_weights(order.alpha, n);
  const double scale = std::pow(h, -order.alpha);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    detail::Kahan acc;
    for (std::size_t m = 0; m <= j; ++m) acc.add(w[m] * f.values[j - m]);
    out[j] = scale * acc.sum;
  }
  return SampledFunction(f.grid, std::move(out));
}

double abel_integral(const std::function<double(double)>& f, double z, double z0) {
  if (!(z > z0)) throw DomainError("abel_integral: requires z > z0");
  // zeta = z - s^2 removes the endpoint singularity:
  // int_{z0}^{z} f(zeta)/sqrt(z-zeta) dzeta = 2 int_0^{sqrt(z-z0)} f(z-s^2) ds.
  const double smax = std::sqrt(z - z0);
  auto g = [&](double s) { return 2.0 * f(z - s * s); };
  return detail::gk_adaptive(g, 0.0, smax, 1e-13, 1e-11);
}

double rl_half_derivative(const std::function<double(double)>& f, double z, double z0) {
  if (!(z > z0)) throw DomainError("rl_half_derivative: requires z > z0");
  const double h = 1e-5 * std::max(1.0, z);
  const double lo = std::max(z - h, z0 + 0.25 * (z - z0) * 1e-12);
  const double a_hi = abel_integral(f, z + h, z0);
  const double a_lo = abel_integral(f, lo, z0);
  return (a_hi - a_lo) / ((z + h - lo) * std::sqrt(M_PI));
}

double riesz_symbol(double k, const FractionalOrder& order) {
  return -std::pow(std::abs(k), order.alpha);
}

std::complex<double> asymmetric_symbol(double k, const FractionalOrder& order,
                                       const AsymmetryWeights& w) {
  if (order.alpha == 1.0 && w.symmetric())
    throw ParameterError(
        "asymmetric_symbol: p(-ik) + q(ik) vanishes at alpha = 1 with p = q; "
        "use riesz_symbol for the symmetric alpha = 1 operator");
  if (k == 0.0) return {0.0, 0.0};
  // Principal branches: for k > 0, (ik)^a = |k|^a e^{i a pi/2} and
  // (-ik)^a = |k|^a e^{-i a pi/2}; signs swap for k < 0.
  const double mag = std::pow(std::abs(k), order.alpha);
  const double phase = 0.5 * M_PI * order.alpha * (k > 0.0 ? 1.0 : -1.0);
  const std::complex<double> forward = mag * std::exp(std::complex<double>(0.0, -phase));
  const std::complex<double> backward = mag * std::exp(std::complex<double>(0.0, phase));
  return w.p * forward + w.q * backward;
}

double laplacian_symbol(const std::vector<double>& kvec, const FractionalOrder& order) {
  double norm2 = 0.0;
  for (double k : kvec) norm2 += k * k;
  return -std::pow(norm2, 0.5 * order.alpha);
}

std::complex<double> coupled_symbol(std::complex<double> s, double k, const TimeOrder& order) {
  if (!(s.real() > 0.0))
    throw DomainError("coupled_symbol: requires Re(s) > 0");
  return std::pow(s + std::complex<double>(k * k, 0.0), order.beta);
}

}  // namespace fracops
}  // namespace fracwave
