#include "cesaro/testfns.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cesaro {

namespace {

// Direct convolution up to this truncation; above it the closed form of
// the squared logarithm's coefficients is used.
constexpr std::size_t kConvolutionLimit = 4096;

void check_peak_parameter(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw std::invalid_argument("peak parameter a must lie in (0,1)");
  }
}

}  // namespace

std::string_view to_string(TestFamily family) {
  switch (family) {
    case TestFamily::PowerAlpha:
      return "power_alpha";
    case TestFamily::FA:
      return "fa";
    case TestFamily::Log:
      return "log";
    case TestFamily::LogSquaredA:
      return "log_squared_a";
    case TestFamily::Geometric:
      return "geometric";
    case TestFamily::Basis:
      return "basis";
  }
  return "geometric";
}

std::size_t min_truncation_for(double a) {
  check_peak_parameter(a);
  return static_cast<std::size_t>(std::ceil(64.0 / (1.0 - a)));
}

PowerSeries make_power_alpha(double alpha, std::size_t truncation) {
  if (truncation < 1) {
    throw std::invalid_argument("make_power_alpha needs N >= 1");
  }
  std::vector<double> c(truncation + 1, 0.0);
  for (std::size_t n = 1; n <= truncation; ++n) {
    c[n] = std::pow(static_cast<double>(n), alpha - 2.0);
  }
  return PowerSeries(std::move(c));
}

PowerSeries make_log(std::size_t truncation) { return make_power_alpha(1.0, truncation); }

PowerSeries make_fa(double alpha, double a, std::size_t truncation) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("make_fa needs alpha > 0");
  }
  check_peak_parameter(a);
  std::vector<double> c(truncation + 1);
  const double log_a = std::log(a);
  const double lg_alpha = std::lgamma(alpha);
  const double log_scale = std::log1p(-a);
  for (std::size_t n = 0; n <= truncation; ++n) {
    const double nd = static_cast<double>(n);
    c[n] = std::exp(log_scale + nd * log_a + std::lgamma(nd + alpha) - lg_alpha -
                    std::lgamma(nd + 1.0));
  }
  return PowerSeries(std::move(c));
}

PowerSeries log_squared_by_convolution(double a, std::size_t truncation) {
  check_peak_parameter(a);
  std::vector<double> g(truncation + 1);
  g[0] = std::numbers::ln2;
  double power = 1.0;
  for (std::size_t n = 1; n <= truncation; ++n) {
    power *= a;
    g[n] = power / static_cast<double>(n);
  }
  const double norm = std::log(2.0 / (1.0 - a));
  std::vector<double> c(truncation + 1, 0.0);
  for (std::size_t n = 0; n <= truncation; ++n) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      acc += g[k] * g[n - k];
    }
    c[n] = acc / norm;
  }
  return PowerSeries(std::move(c));
}

PowerSeries make_log_squared_a(double a, std::size_t truncation) {
  if (truncation <= kConvolutionLimit) {
    return log_squared_by_convolution(a, truncation);
  }
  check_peak_parameter(a);
  // [log(2/(1-az))^2]_n = a^n (2 log 2 + 2 H_{n-1}) / n for n >= 1.
  const double norm = std::log(2.0 / (1.0 - a));
  const double log_a = std::log(a);
  std::vector<double> c(truncation + 1);
  c[0] = std::numbers::ln2 * std::numbers::ln2 / norm;
  CompensatedSum harmonic;
  for (std::size_t n = 1; n <= truncation; ++n) {
    const double nd = static_cast<double>(n);
    c[n] = std::exp(nd * log_a) * 2.0 * (std::numbers::ln2 + harmonic.value()) / (nd * norm);
    harmonic.add(1.0 / nd);
  }
  return PowerSeries(std::move(c));
}

PowerSeries make_geometric(std::size_t truncation) {
  return PowerSeries(std::vector<double>(truncation + 1, 1.0));
}

PowerSeries make_basis(std::size_t index, std::size_t truncation) {
  if (index > truncation) {
    throw std::invalid_argument("basis index exceeds truncation");
  }
  std::vector<double> c(truncation + 1, 0.0);
  c[index] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries make(const TestFamilySpec& spec) {
  switch (spec.family) {
    case TestFamily::PowerAlpha:
      return make_power_alpha(spec.alpha, spec.truncation);
    case TestFamily::FA:
      return make_fa(spec.alpha, spec.a, spec.truncation);
    case TestFamily::Log:
      return make_log(spec.truncation);
    case TestFamily::LogSquaredA:
      return make_log_squared_a(spec.a, spec.truncation);
    case TestFamily::Geometric:
      return make_geometric(spec.truncation);
    case TestFamily::Basis:
      return make_basis(spec.index, spec.truncation);
  }
  throw std::invalid_argument("unknown test family");
}

}  // namespace cesaro
