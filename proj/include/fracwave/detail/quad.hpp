#pragma once

// Small quadrature toolkit used by the special-function and density code.
// Gauss-Legendre rules are generated once per order by Newton iteration on
// the Legendre polynomial; the adaptive driver is a (G7,K15) pair.

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

namespace fracwave::detail {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Nodes/weights of the n-point Gauss-Legendre rule, cached per order.
inline const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

// Fixed-order Gauss-Legendre on [a, b]; F may return double or complex.
template <class F>
auto gl_integrate(F&& f, double a, double b, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  using R = decltype(f(a));
  R total{};
  for (int i = 0; i < n; ++i) {
    total += static_cast<R>(rule.weights[i] * half) * f(mid + half * rule.nodes[i]);
  }
  return total;
}

// (G7, K15) nodes.  Positive half; mirrored in the evaluator.
inline constexpr double kK15Nodes[8] = {
    0.000000000000000000, 0.207784955007898468, 0.405845151377397167,
    0.586087235467691130, 0.741531185599394440, 0.864864423359769073,
    0.949107912342758525, 0.991455371120812639};
inline constexpr double kK15Weights[8] = {
    0.209482141084727828, 0.204432940075298892, 0.190350578064785410,
    0.169004726639267903, 0.140653259715525919, 0.104790010322250184,
    0.063092092629978553, 0.022935322010529225};
inline constexpr double kG7Weights[4] = {
    0.417959183673469388, 0.381830050505118945, 0.279705391489276668,
    0.129484966168869693};

template <class R>
struct GkEstimate {
  R value{};
  double error = 0.0;
};

template <class F>
auto gk15(F&& f, double a, double b) {
  using R = decltype(f(a));
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  R fv[15];
  fv[7] = f(mid);
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(mid - half * kK15Nodes[7 - i]);
    fv[14 - i] = f(mid + half * kK15Nodes[7 - i]);
  }
  R kronrod = static_cast<R>(kK15Weights[0] * half) * fv[7];
  for (int i = 1; i < 8; ++i) {
    kronrod += static_cast<R>(kK15Weights[i] * half) * (fv[7 - i] + fv[7 + i]);
  }
  // Gauss-7 uses nodes 1, 3, 5, 7 of the positive half.
  R gauss = static_cast<R>(kG7Weights[0] * half) * fv[7];
  for (int i = 1; i < 4; ++i) {
    gauss += static_cast<R>(kG7Weights[i] * half) * (fv[7 - 2 * i] + fv[7 + 2 * i]);
  }
  GkEstimate<R> est;
  est.value = kronrod;
  est.error = std::abs(kronrod - gauss);
  return est;
}

// Adaptive bisection on (G7,K15).  Splits the worst interval first by
// plain recursion; depth cap keeps endpoint singularities from looping.
template <class F>
auto gk_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                 int max_depth = 48) {
  using R = decltype(f(a));
  struct Worker {
    F& func;
    double abs_tol, rel_tol;
    int max_depth;
    R run(double lo, double hi, double tol, int depth) {
      auto est = gk15(func, lo, hi);
      if (est.error <= tol || depth >= max_depth) return est.value;
      double mid = 0.5 * (lo + hi);
      return run(lo, mid, 0.5 * tol, depth + 1) +
             run(mid, hi, 0.5 * tol, depth + 1);
    }
  };
  Worker w{f, abs_tol, rel_tol, max_depth};
  auto first = gk15(f, a, b);
  double tol = std::max(abs_tol, rel_tol * std::abs(first.value));
  if (first.error <= tol) return first.value;
  double mid = 0.5 * (a + b);
  return w.run(a, mid, 0.5 * tol, 1) + w.run(mid, b, 0.5 * tol, 1);
}

// Kahan-compensated accumulator for long direct sums.
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace fracwave::detail
