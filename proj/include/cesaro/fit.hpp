#pragma once

#include <span>

namespace cesaro {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y ~ intercept + slope * x. Needs >= 2 points.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// (max - min) / max over positive samples; 0 for an empty span.
double relative_variation(std::span<const double> y);

/// True when every step y[i+1] <= y[i] * (1 + slack).
bool nonincreasing(std::span<const double> y, double slack = 0.0);

/// True when every step y[i+1] >= y[i] * (1 - slack).
bool nondecreasing(std::span<const double> y, double slack = 0.0);

}  // namespace cesaro
