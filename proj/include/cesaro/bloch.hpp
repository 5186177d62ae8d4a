#pragma once

/// \file
/// Bloch-type seminorm estimates and the coefficient-level criteria used
/// to decide membership of truncated series in B^alpha.

#include "cesaro/series.hpp"

#include <cstddef>
#include <vector>

namespace cesaro {

struct SeminormEstimate {
  double alpha = 0.0;
  double value = 0.0;  // sup over the grid of (1-r^2)^alpha |f'(r e^{i theta})|
  double argmax_radius = 0.0;
  double argmax_angle = 0.0;
  int grid_depth = 0;  // dyadic levels actually used
  bool truncation_limited = false;
};

inline constexpr int kDefaultAngles = 64;

/// Largest dyadic level j with 1 - 2^{-j} <= 1 - 8/N.
int truncation_cap_level(std::size_t truncation);

/// Sup of (1-r^2)^alpha |f'| on r_j = 1 - 2^{-j}, j = 0..min(depth, cap),
/// and `angles` equispaced angles (forced to 1 for nonnegative
/// coefficients).
SeminormEstimate bloch_seminorm(const PowerSeries& f, double alpha, int depth = 40,
                                int angles = kDefaultAngles);

/// |f(0)| + seminorm.
double bloch_norm(const PowerSeries& f, double alpha, int depth = 40,
                  int angles = kDefaultAngles);

struct TracePoint {
  std::size_t n = 0;
  double value = 0.0;
};

struct Lemma22Result {
  double sup = 0.0;                // max over 1 <= n <= N of n^{-alpha} sum_{k<=n} k a_k
  std::vector<TracePoint> trace;   // sampled at n = 1, 2, 4, ...
};

/// Requires nonnegative coefficients (throws std::invalid_argument).
Lemma22Result lemma22_criterion(const PowerSeries& f, double alpha);

enum class MembershipVerdict { BoundedLike, UnboundedLike };

/// Growth factor above which a doubling counts as divergence.
inline constexpr double kEscalationFactor = 1.25;

/// Plateau-vs-growth call on the last two dyadic trace samples.
MembershipVerdict lemma22_verdict(const Lemma22Result& result);

struct EscalationResult {
  std::vector<std::size_t> truncations;
  std::vector<double> values;
  MembershipVerdict verdict = MembershipVerdict::BoundedLike;
};

/// Seminorms of the truncations f_{N0}, f_{2 N0}, ..., f_{N} (N = f's
/// truncation); unbounded-like if any doubling grows by > 1.25.
EscalationResult seminorm_escalation(const PowerSeries& f, double alpha, std::size_t n0);

struct PartialSumGrowth {
  double sup = 0.0;        // sup over n >= 1 of |a_1 + ... + a_n| / log(n+1)
  std::size_t argmax = 0;
};

PartialSumGrowth partial_sum_growth(const PowerSeries& f);

/// max over the dyadic radial grid of |f(z)| / g(z), where g is the
/// pointwise bound for B^alpha functions with norm `norm`: norm for
/// alpha < 1, norm log(2/(1-|z|)) for alpha = 1, norm (1-|z|)^{1-alpha}
/// for alpha > 1. Returns +inf when norm = 0 and f is nonzero.
double growth_bound_check(const PowerSeries& f, double alpha, double norm, int depth = 20);

}  // namespace cesaro
