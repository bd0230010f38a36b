#pragma once

// Uniform grids and field containers shared by the solver modules.
// A Grid1D carries both the physical nodes x_j = x_min + j*dx (x_max
// excluded, periodic) and the dual wavenumbers k_m = 2*pi*m/(x_max - x_min)
// in standard transform layout.

#include <cmath>
#include <cstddef>
#include <vector>

#include "fracwave/error.hpp"

namespace fracwave {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

class Grid1D {
 public:
  Grid1D(double x_min, double x_max, std::size_t n) : x_min_(x_min), x_max_(x_max), n_(n) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_max <= x_min)
      throw GridError("Grid1D: domain must be finite with x_max > x_min");
    if (!is_power_of_two(n) || n < 64)
      throw GridError("Grid1D: n must be a power of two, n >= 64");
    dx_ = (x_max - x_min) / static_cast<double>(n);
  }

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return n_; }
  double dx() const { return dx_; }
  double length() const { return x_max_ - x_min_; }
  double dk() const { return 2.0 * M_PI / length(); }
  // Nyquist wavenumber pi/dx; the spectral cutoff of this grid.
  double k_max() const { return M_PI / dx_; }

  double x(std::size_t j) const { return x_min_ + dx_ * static_cast<double>(j); }

  // Wavenumber of transform index m in standard layout:
  // m <= n/2 -> m*dk, m > n/2 -> (m - n)*dk.
  double k(std::size_t m) const {
    const auto half = n_ / 2;
    const double idx = (m <= half) ? static_cast<double>(m)
                                   : static_cast<double>(m) - static_cast<double>(n_);
    return idx * dk();
  }

  std::vector<double> x_nodes() const {
    std::vector<double> xs(n_);
    for (std::size_t j = 0; j < n_; ++j) xs[j] = x(j);
    return xs;
  }

  bool operator==(const Grid1D& o) const {
    return x_min_ == o.x_min_ && x_max_ == o.x_max_ && n_ == o.n_;
  }

 private:
  double x_min_, x_max_;
  std::size_t n_;
  double dx_;
};

// Square 2-D grid; same node/dual conventions per axis.
class Grid2D {
 public:
  Grid2D(double x_min, double x_max, std::size_t n) : axis_(x_min, x_max, n) {}

  const Grid1D& axis() const { return axis_; }
  std::size_t size() const { return axis_.size(); }
  double dx() const { return axis_.dx(); }
  double x(std::size_t i) const { return axis_.x(i); }
  double k(std::size_t m) const { return axis_.k(m); }
  double k_max() const { return axis_.k_max(); }

 private:
  Grid1D axis_;
};

// Real function sampled on a Grid1D.
struct SampledFunction {
  Grid1D grid;
  std::vector<double> values;

  SampledFunction(Grid1D g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
      throw GridError("SampledFunction: value count does not match grid");
    for (double x : values)
      if (!std::isfinite(x)) throw DomainError("SampledFunction: non-finite sample");
  }
};

// Concentration field W on a grid at time t, with its trapezoid mass.
struct Propagator {
  Grid1D grid;
  double t = 0.0;
  std::vector<double> values;
  double mass = 0.0;

  Propagator(Grid1D g, double time, std::vector<double> v)
      : grid(g), t(time), values(std::move(v)) {
    if (values.size() != grid.size())
      throw GridError("Propagator: value count does not match grid");
    mass = trapezoid_mass();
  }

  double trapezoid_mass() const {
    double s = 0.5 * (values.front() + values.back());
    for (std::size_t j = 1; j + 1 < values.size(); ++j) s += values[j];
    return s * grid.dx();
  }
};

struct Propagator2D {
  Grid2D grid;
  double t = 0.0;
  std::vector<double> values;  // row-major, values[iy * n + ix]
  double mass = 0.0;

  Propagator2D(Grid2D g, double time, std::vector<double> v)
      : grid(g), t(time), values(std::move(v)) {
    const std::size_t n = grid.size();
    if (values.size() != n * n)
      throw GridError("Propagator2D: value count does not match grid");
    double s = 0.0;
    for (double w : values) s += w;
    mass = s * grid.dx() * grid.dx();
  }

  double at(std::size_t ix, std::size_t iy) const { return values[iy * grid.size() + ix]; }
};

}  // namespace fracwave
