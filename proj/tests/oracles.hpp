#pragma once

// Independent reference computations for the unit tests. None of these
// share code paths with the library: moments go through tanh-sinh in the
// original t variable, sums through long double, f_a through its ratio
// recurrence.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// h(t) = c (1-t)^s log^{-gamma}(e/(1-t)).
inline double plt_tail(double s, double gamma, double c, double t) {
  const double u = 1.0 - t;
  return c * std::pow(u, s) * std::pow(1.0 - std::log(u), -gamma);
}

/// mu_n = n * int_0^1 t^{n-1} h(t) dt, tanh-sinh on [0,1].
inline double plt_moment(double s, double gamma, double c, std::uint64_t n) {
  if (n == 0) {
    return plt_tail(s, gamma, c, 0.0);
  }
  boost::math::quadrature::tanh_sinh<double> ts(15);
  const double nd = static_cast<double>(n);
  const auto f = [&](double t, double complement) {
    const double u = t > 0.5 ? complement : 1.0 - t;
    return std::pow(t, nd - 1.0) * c * std::pow(u, s) * std::pow(1.0 - std::log(u), -gamma);
  };
  return nd * ts.integrate(f, 0.0, 1.0, 1e-14);
}

/// Gamma(n+1) Gamma(s+1) / Gamma(n+s+1) by the product
/// prod_{k=1}^{n} k / (k + s), exact up to rounding.
inline double beta_moment(double s, std::uint64_t n) {
  long double p = 1.0L;
  for (std::uint64_t k = 1; k <= n; ++k) {
    p *= static_cast<long double>(k) / (static_cast<long double>(k) + s);
  }
  return static_cast<double>(p);
}

/// b_n = mu_n * (a_0 + ... + a_n), long double accumulation.
inline std::vector<double> cesaro(const std::vector<double>& mu, const std::vector<double>& a) {
  std::vector<double> b(a.size());
  long double s = 0.0L;
  for (std::size_t n = 0; n < a.size(); ++n) {
    s += a[n];
    b[n] = static_cast<double>(mu[n] * s);
  }
  return b;
}

/// Coefficients of (1-a)/(1-az)^alpha via c_{n+1} = c_n a (n+alpha)/(n+1).
inline std::vector<double> fa(double alpha, double a, std::size_t n_max) {
  std::vector<double> c(n_max + 1);
  long double v = 1.0L - a;
  for (std::size_t n = 0; n <= n_max; ++n) {
    c[n] = static_cast<double>(v);
    v *= a * (n + alpha) / (n + 1.0L);
  }
  return c;
}

/// I_r = int_0^1 (1-t)^delta log^k(e/(1-t)) / (1-tr)^{delta+c+1} dt by
/// tanh-sinh in t.
inline double endpoint_integral(double delta, double c, double k, double r) {
  boost::math::quadrature::tanh_sinh<double> ts(15);
  const auto f = [&](double t, double complement) {
    const double u = t > 0.5 ? complement : 1.0 - t;
    return std::pow(u, delta) * std::pow(1.0 - std::log(u), k) /
           std::pow(1.0 - t * r, delta + c + 1.0);
  };
  return ts.integrate(f, 0.0, 1.0, 1e-13);
}

/// Fixed-seed random real series in [-1, 1].
inline std::vector<double> random_series(std::mt19937_64& rng, std::size_t n_max) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> a(n_max + 1);
  for (auto& x : a) {
    x = dist(rng);
  }
  return a;
}

}  // namespace oracle
