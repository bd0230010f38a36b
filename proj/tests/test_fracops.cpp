#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fracwave/fracops.hpp"
#include "fracwave/grid.hpp"
#include "fracwave/specfun.hpp"
#include "oracles.hpp"

using namespace fracwave;
using namespace fracwave::fracops;

namespace {

SampledFunction sample(const Grid1D& g, const std::function<double(double)>& f) {
  std::vector<double> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = f(g.x(j));
  return SampledFunction(g, std::move(v));
}

std::size_t index_of(const Grid1D& g, double x) {
  return static_cast<std::size_t>(std::llround((x - g.x_min()) / g.dx()));
}

}  // namespace

TEST_CASE("grid construction errors") {
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 100), GridError);    // not a power of two
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 32), GridError);     // too small
  CHECK_THROWS_AS(Grid1D(1.0, 0.0, 128), GridError);    // inverted domain
  CHECK_THROWS_AS(SampledFunction(Grid1D(0.0, 1.0, 128), std::vector<double>(5)),
                  GridError);
}

TEST_CASE("gl derivative of linear function at alpha = 1 is exact") {
  Grid1D g(0.0, 1.0, 128);  // h = 1/128
  auto f = sample(g, [](double x) { return x; });
  auto d = gl_derivative(f, FractionalOrder(1.0));
  for (std::size_t j = 1; j < g.size(); ++j)
    CHECK(d.values[j] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gl derivative converges to analytic half-derivatives") {
  // D^{1/2} 1 = x^{-1/2}/Gamma(1/2) and D^{1/2} sqrt(x) = sqrt(pi)/2,
  // both evaluated at x = 1.
  const double ref_const = 1.0 / std::sqrt(M_PI);
  const double ref_sqrt = std::sqrt(M_PI) / 2.0;
  double err_prev_const = 1e9, err_prev_sqrt = 1e9;
  for (std::size_t n : {512u, 1024u, 2048u, 4096u}) {
    Grid1D g(0.0, 1.0 + 1.0 / n, n);  // put x = 1 on the grid interior
    auto one = sample(g, [](double) { return 1.0; });
    auto root = sample(g, [](double x) { return std::sqrt(x); });
    const std::size_t j = index_of(g, 1.0);
    const double v1 = gl_derivative(one, FractionalOrder(0.5)).values[j];
    const double v2 = gl_derivative(root, FractionalOrder(0.5)).values[j];
    const double e1 = std::abs(v1 - ref_const);
    const double e2 = std::abs(v2 - ref_sqrt);
    CHECK(e1 < err_prev_const);
    CHECK(e2 < err_prev_sqrt);
    err_prev_const = e1;
    err_prev_sqrt = e2;
  }
  CHECK(err_prev_const < 2e-3);
  CHECK(err_prev_sqrt < 2e-3);
}

TEST_CASE("gl convergence is first order for x^2") {
  // Analytic: D^{1/2} x^2 = Gamma(3)/Gamma(2.5) x^{1.5}.
  const double coef = 2.0 / std::tgamma(2.5);
  std::vector<double> logh, logerr;
  for (std::size_t n : {64u, 128u, 256u, 512u}) {
    Grid1D g(0.0, 1.0, n);
    auto f = sample(g, [](double x) { return x * x; });
    auto d = gl_derivative(f, FractionalOrder(0.5));
    double maxerr = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ref = coef * std::pow(g.x(j), 1.5);
      maxerr = std::max(maxerr, std::abs(d.values[j] - ref));
    }
    logh.push_back(std::log(g.dx()));
    logerr.push_back(std::log(maxerr));
  }
  const double slope = oracles::fit_slope(logh, logerr);
  CHECK(slope == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("two alpha = 1 passes equal the discrete second difference") {
  Grid1D g(0.0, 2.0, 64);
  auto f = sample(g, [](double x) { return std::sin(3.0 * x) + x * x; });
  auto once = gl_derivative(f, FractionalOrder(1.0));
  auto twice = gl_derivative(once, FractionalOrder(1.0));
  const double h = g.dx();
  for (std::size_t j = 2; j < g.size(); ++j) {
    const double second =
        (f.values[j] - 2.0 * f.values[j - 1] + f.values[j - 2]) / (h * h);
    CHECK(twice.values[j] == doctest::Approx(second).epsilon(1e-11));
  }
}

TEST_CASE("gl derivative rejects alpha > 1") {
  Grid1D g(0.0, 1.0, 64);
  auto f = sample(g, [](double x) { return x; });
  CHECK_THROWS_AS(gl_derivative(f, FractionalOrder(1.5)), ParameterError);
}

TEST_CASE("riemann-liouville half-derivative analytic values") {
  auto one = [](double) { return 1.0; };
  auto root = [](double z) { return std::sqrt(z); };
  auto lin = [](double z) { return z; };
  CHECK(rl_half_derivative(one, 1.0) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-7));
  CHECK(rl_half_derivative(root, 1.0) ==
        doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-7));
  CHECK(rl_half_derivative(lin, 4.0) ==
        doctest::Approx(2.0 * std::sqrt(4.0 / M_PI)).epsilon(1e-7));
  CHECK_THROWS_AS(rl_half_derivative(one, 0.0), DomainError);
  CHECK_THROWS_AS(rl_half_derivative(one, 1.0, 2.0), DomainError);
}

TEST_CASE("rl half-derivative on a smooth transcendental function") {
  // Oracle: differentiate the Abel integral with an independent Simpson rule.
  auto f = [](double z) { return std::exp(-z) * std::cos(2.0 * z); };
  const double z = 1.7;
  auto abel = [&](double zz) {
    return oracles::integrate(
        [&](double s) { return 2.0 * f(zz - s * s); }, 0.0, std::sqrt(zz), 1e-13);
  };
  const double h = 1e-5;
  const double ref = (abel(z + h) - abel(z - h)) / (2.0 * h * std::sqrt(M_PI));
  CHECK(rl_half_derivative(f, z) == doctest::Approx(ref).epsilon(1e-6));
}

TEST_CASE("riesz symbol") {
  FractionalOrder a15(1.5);
  CHECK(riesz_symbol(0.0, a15) == 0.0);
  CHECK(riesz_symbol(2.0, FractionalOrder(2.0)) == doctest::Approx(-4.0));
  CHECK(riesz_symbol(3.0, a15) == doctest::Approx(-std::pow(3.0, 1.5)).epsilon(1e-14));
  CHECK(riesz_symbol(-3.0, a15) == riesz_symbol(3.0, a15));
}

TEST_CASE("asymmetric symbol") {
  AsymmetryWeights half(0.5, 0.5);
  // Symmetric combination is real: |k|^a cos(pi a / 2).
  for (double alpha : {0.5, 1.5, 1.9}) {
    for (double k : {0.5, 1.0, 4.0}) {
      const auto s = asymmetric_symbol(k, FractionalOrder(alpha), half);
      CHECK(std::abs(s.imag()) < 1e-14);
      CHECK(s.real() == doctest::Approx(std::pow(k, alpha) *
                                        std::cos(0.5 * M_PI * alpha))
                            .epsilon(1e-13));
    }
  }
  // alpha = 2 recovers -k^2 and matches the Riesz symbol exactly.
  const auto s2 = asymmetric_symbol(1.0, FractionalOrder(2.0), half);
  CHECK(s2.real() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(s2.imag()) < 1e-14);
  CHECK(s2.real() == riesz_symbol(1.0, FractionalOrder(2.0)));

  // Principal branch: p=1, q=0, alpha=0.5, k=1 -> e^{-i pi/4}.
  const auto s3 = asymmetric_symbol(1.0, FractionalOrder(0.5), AsymmetryWeights(1.0, 0.0));
  CHECK(s3.real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(s3.imag() == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-14));

  // Degenerate case.
  CHECK_THROWS_AS(asymmetric_symbol(1.0, FractionalOrder(1.0), half), ParameterError);

  // Real part nonpositive for alpha in [1, 2]: decay of exp(symbol t).
  for (double alpha : {1.0 + 1e-9, 1.2, 1.7, 2.0}) {
    const auto s = asymmetric_symbol(2.0, FractionalOrder(alpha), AsymmetryWeights(0.8, 0.2));
    CHECK(s.real() <= 1e-15);
  }
}

TEST_CASE("asymmetric symbol conjugate symmetry") {
  for (double alpha : {0.4, 1.3, 1.8}) {
    for (double p : {0.0, 0.3, 0.9}) {
      AsymmetryWeights w(p, 1.0 - p);
      for (double k : {0.3, 1.0, 7.7}) {
        const auto plus = asymmetric_symbol(k, FractionalOrder(alpha), w);
        const auto minus = asymmetric_symbol(-k, FractionalOrder(alpha), w);
        CHECK(std::abs(minus - std::conj(plus)) < 1e-14 * std::abs(plus));
      }
    }
  }
}

TEST_CASE("laplacian symbol") {
  FractionalOrder a1(1.0);
  CHECK(laplacian_symbol({0.0, 0.0}, a1) == 0.0);
  CHECK(laplacian_symbol({3.0, 4.0}, a1) == doctest::Approx(-5.0).epsilon(1e-14));
  CHECK(laplacian_symbol({1.0, 1.0}, FractionalOrder(2.0)) ==
        doctest::Approx(-2.0).epsilon(1e-14));
  // Rotation invariance: only the norm matters.
  CHECK(laplacian_symbol({5.0, 0.0}, FractionalOrder(1.5)) ==
        doctest::Approx(laplacian_symbol({3.0, 4.0}, FractionalOrder(1.5))).epsilon(1e-14));
}

TEST_CASE("coupled symbol") {
  TimeOrder b1(1.0), bhalf(0.5);
  CHECK(coupled_symbol({1.0, 0.0}, 1.0, b1).real() == doctest::Approx(2.0));
  CHECK(std::abs(coupled_symbol({1.0, 0.0}, 1.0, b1).imag()) < 1e-15);
  CHECK(coupled_symbol({1.0, 0.0}, 1.0, bhalf).real() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // Principal square root of 1 + i, oracle by polar form.
  const std::complex<double> z(1.0, 1.0);
  const double r = std::sqrt(std::abs(z));
  const double th = 0.5 * std::arg(z);
  const auto got = coupled_symbol(z, 0.0, bhalf);
  CHECK(got.real() == doctest::Approx(r * std::cos(th)).epsilon(1e-14));
  CHECK(got.imag() == doctest::Approx(r * std::sin(th)).epsilon(1e-14));
  CHECK(got.real() == doctest::Approx(1.0986841134678100).epsilon(1e-13));
  CHECK(got.imag() == doctest::Approx(0.45508986056222733).epsilon(1e-13));
  CHECK_THROWS_AS(coupled_symbol({-1.0, 0.5}, 1.0, bhalf), DomainError);
  CHECK_THROWS_AS(coupled_symbol({0.0, 1.0}, 1.0, bhalf), DomainError);
}

TEST_CASE("parameter type validation") {
  CHECK_THROWS_AS(FractionalOrder(0.0), ParameterError);
  CHECK_THROWS_AS(FractionalOrder(2.5), ParameterError);
  CHECK_THROWS_AS(TimeOrder(0.0), ParameterError);
  CHECK_THROWS_AS(TimeOrder(1.5), ParameterError);
  CHECK_THROWS_AS(AsymmetryWeights(0.7, 0.7), ParameterError);
  CHECK_THROWS_AS(AsymmetryWeights(-0.1, 1.1), ParameterError);
}
