#pragma once

/// \file
/// Classification of measures on [0,1) as (vanishing) gamma-logarithmic
/// s-Carleson, by tail quotients on a dyadic grid and independently by the
/// decay of the moment sequence.

#include "cesaro/measure.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cesaro {

enum class CarlesonVerdict { CarlesonBounded, VanishingCarleson, NotCarleson, Inconclusive };

std::string_view to_string(CarlesonVerdict v);

struct QuotientSample {
  int level = 0;       // j in t_j = 1 - 2^{-j}
  double t = 0.0;
  double quotient = 0.0;
};

struct CarlesonReport {
  double s = 0.0;
  double gamma = 0.0;
  int depth = 0;
  std::vector<QuotientSample> grid;
  double sup_estimate = 0.0;
  double limit_estimate = 0.0;
  /// Slope of log2 q against the level over the last half of the grid.
  double tail_slope = 0.0;
  /// Exponent p in q ~ log^p(e/(1-t)) fitted over the last half.
  double log_exponent = 0.0;
  /// max over n in {1, 2, 4, ...} of n^s log^gamma(n+1) mu_n.
  double moment_sup = 0.0;
  /// Slope of log2(n^s log^gamma(n+1) mu_n) against log2 n, top half.
  double moment_slope = 0.0;
  /// Whether the moment route reaches the same bounded/unbounded call.
  bool moments_agree = false;
  CarlesonVerdict verdict = CarlesonVerdict::Inconclusive;
};

inline constexpr int kDefaultCarlesonDepth = 30;

/// q(t) = mu([t,1)) log^gamma(e/(1-t)) / (1-t)^s.
double carleson_quotient(const MeasureSpec& m, double s, double gamma, double t);

/// Dyadic-grid classification; depth >= 8.
CarlesonReport classify(const MeasureSpec& m, double s, double gamma,
                        int depth = kDefaultCarlesonDepth);

struct MomentCarlesonResult {
  double sup = 0.0;             // sup over the grid of n^s mu_n
  double fitted_exponent = 0.0; // slope of log mu_n vs log n, top half
};

/// Moment-decay route: n_grid strictly increasing with entries >= 1.
MomentCarlesonResult moment_carleson_test(const MeasureSpec& m, double s,
                                          std::span<const std::uint64_t> n_grid);

/// 1, 2, 4, ..., 2^k.
std::vector<std::uint64_t> dyadic_integers(int k);

}  // namespace cesaro
