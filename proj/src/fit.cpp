#include "cesaro/fit.hpp"

#include <algorithm>
#include <stdexcept>

namespace cesaro {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line needs two equally sized samples of length >= 2");
  }
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit_line needs at least two distinct abscissas");
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

double relative_variation(std::span<const double> y) {
  if (y.empty()) {
    return 0.0;
  }
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  if (*hi <= 0.0) {
    return 0.0;
  }
  return (*hi - *lo) / *hi;
}

bool nonincreasing(std::span<const double> y, double slack) {
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i] > y[i - 1] * (1.0 + slack)) {
      return false;
    }
  }
  return true;
}

bool nondecreasing(std::span<const double> y, double slack) {
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i] < y[i - 1] * (1.0 - slack)) {
      return false;
    }
  }
  return true;
}

}  // namespace cesaro
