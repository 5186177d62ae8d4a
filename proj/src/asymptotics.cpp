#include "cesaro/asymptotics.hpp"

#include "cesaro/fit.hpp"
#include "cesaro/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace cesaro {

namespace {

constexpr double kStabilizationBand = 0.15;

}  // namespace

std::string_view to_string(GrowthRegime r) {
  switch (r) {
    case GrowthRegime::Constant:
      return "constant";
    case GrowthRegime::LogLog:
      return "log_log";
    case GrowthRegime::LogPower:
      return "log_power";
    case GrowthRegime::PowerLog:
      return "power_log";
  }
  return "constant";
}

GrowthRegime growth_regime(double c, double k) {
  if (c > 0.0) {
    return GrowthRegime::PowerLog;
  }
  if (k < -1.0) {
    return GrowthRegime::Constant;
  }
  if (k == -1.0) {
    return GrowthRegime::LogLog;
  }
  return GrowthRegime::LogPower;
}

double predicted_growth(GrowthRegime regime, double c, double k, double r) {
  const double log_e = 1.0 - std::log1p(-r);  // log(e/(1-r))
  switch (regime) {
    case GrowthRegime::Constant:
      return 1.0;
    case GrowthRegime::LogLog:
      return std::log(1.0 + log_e);  // log log(e^2/(1-r))
    case GrowthRegime::LogPower:
      return std::pow(log_e, k + 1.0);
    case GrowthRegime::PowerLog:
      return std::pow(1.0 - r, -c) * std::pow(log_e, k);
  }
  return 1.0;
}

double lemma24_integral(double delta, double c, double k, double r) {
  if (!(delta > -1.0)) {
    throw std::invalid_argument("lemma24_integral needs delta > -1");
  }
  if (!(c >= 0.0)) {
    throw std::invalid_argument("lemma24_integral needs c >= 0");
  }
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("lemma24_integral needs r in [0,1)");
  }
  // With 1 - t = e^{-v}: the endpoint factor (1-t)^delta log^k(e/(1-t))
  // becomes e^{-(delta+1) v} (1+v)^k and the scale 1 - r turns into a
  // smooth transition near v = log(r/(1-r)).
  const double power = delta + c + 1.0;
  const double one_minus_r = 1.0 - r;
  const auto integrand = [&](double v) {
    const double base = one_minus_r + r * std::exp(-v);
    return std::exp(-(delta + 1.0) * v) * std::pow(base, -power) * std::pow(1.0 + v, k);
  };

  const double transition = r > 0.5 ? std::log(r / one_minus_r) : 0.0;
  const double decay = delta + 1.0;
  // Past this point the integrand is monotonically decaying.
  const double settle = std::max(transition + 10.0, k > 0.0 ? k / decay + 1.0 : 0.0);

  QuadratureOptions opts;
  opts.rel_tol = 1e-11;
  auto breaks = uniform_breaks(0.0, settle, 0.5);
  double total = integrate_panels(integrand, breaks, opts).value;

  double a = settle;
  double width = 1.0;
  for (int guard = 0; guard < 400; ++guard) {
    const std::array<double, 2> panel{a, a + width};
    const double part = integrate_panels(integrand, panel, opts).value;
    total += part;
    if (part <= 1e-16 * total) {
      break;
    }
    a += width;
    width *= 1.5;
  }
  return total;
}

AsymptoticScan regime_scan(double delta, double c, double k, int depth) {
  if (depth < 10) {
    throw std::invalid_argument("regime_scan needs depth >= 10");
  }
  AsymptoticScan scan;
  scan.delta = delta;
  scan.c = c;
  scan.k = k;
  scan.regime = growth_regime(c, k);
  for (int j = 5; j <= depth; ++j) {
    ScanSample sample;
    sample.level = j;
    sample.r = 1.0 - std::ldexp(1.0, -j);
    sample.value = lemma24_integral(delta, c, k, sample.r);
    sample.predicted = predicted_growth(scan.regime, c, k, sample.r);
    sample.ratio = sample.value / sample.predicted;
    scan.samples.push_back(sample);
  }
  std::array<double, 3> last{};
  for (std::size_t i = 0; i < 3; ++i) {
    last[i] = scan.samples[scan.samples.size() - 3 + i].ratio;
  }
  scan.stabilized = relative_variation(last) < kStabilizationBand;
  return scan;
}

}  // namespace cesaro
