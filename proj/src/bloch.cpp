#include "cesaro/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cesaro {

namespace {

double horner_real(std::span<const double> a, double r) {
  double acc = 0.0;
  for (std::size_t n = a.size(); n-- > 0;) {
    acc = acc * r + a[n];
  }
  return acc;
}

double abs_at(const PowerSeries& f, double r, double theta) {
  if (theta == 0.0) {
    return std::abs(horner_real(f.coeffs(), r));
  }
  return std::abs(evaluate(f, r, theta));
}

int effective_angles(const PowerSeries& f, int angles) {
  if (angles < 1) {
    throw std::invalid_argument("angles must be >= 1");
  }
  return f.nonnegative() ? 1 : angles;
}

PowerSeries prefix(const PowerSeries& f, std::size_t truncation) {
  return PowerSeries(std::vector<double>(f.coeffs().begin(),
                                         f.coeffs().begin() +
                                             static_cast<std::ptrdiff_t>(truncation + 1)));
}

}  // namespace

int truncation_cap_level(std::size_t truncation) {
  if (truncation < 16) {
    return 0;
  }
  return static_cast<int>(std::floor(std::log2(static_cast<double>(truncation) / 8.0)));
}

SeminormEstimate bloch_seminorm(const PowerSeries& f, double alpha, int depth, int angles) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("bloch_seminorm needs alpha > 0");
  }
  if (depth < 4) {
    throw std::invalid_argument("bloch_seminorm needs depth >= 4");
  }
  const int used_angles = effective_angles(f, angles);
  const int cap = truncation_cap_level(f.truncation());
  const int levels = std::min(depth, cap);
  const PowerSeries df = derivative(f);

  SeminormEstimate est;
  est.alpha = alpha;
  est.grid_depth = levels;
  est.truncation_limited = cap < depth;
  // Strict '>' keeps the lexicographically first (r, theta) on ties.
  bool first = true;
  for (int j = 0; j <= levels; ++j) {
    const double one_minus_r = std::ldexp(1.0, -j);
    const double r = 1.0 - one_minus_r;
    const double weight = std::pow(one_minus_r * (1.0 + r), alpha);
    for (int k = 0; k < used_angles; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / used_angles;
      const double value = weight * abs_at(df, r, theta);
      if (first || value > est.value) {
        est.value = value;
        est.argmax_radius = r;
        est.argmax_angle = theta;
        first = false;
      }
    }
  }
  return est;
}

double bloch_norm(const PowerSeries& f, double alpha, int depth, int angles) {
  return std::abs(f[0]) + bloch_seminorm(f, alpha, depth, angles).value;
}

Lemma22Result lemma22_criterion(const PowerSeries& f, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("lemma22_criterion needs alpha > 0");
  }
  if (!f.nonnegative()) {
    throw std::invalid_argument("lemma22_criterion requires nonnegative coefficients");
  }
  Lemma22Result result;
  CompensatedSum weighted;
  std::size_t next_sample = 1;
  for (std::size_t n = 1; n <= f.truncation(); ++n) {
    weighted.add(static_cast<double>(n) * f[n]);
    const double value = std::pow(static_cast<double>(n), -alpha) * weighted.value();
    result.sup = std::max(result.sup, value);
    if (n == next_sample) {
      result.trace.push_back({n, value});
      next_sample *= 2;
    }
  }
  return result;
}

MembershipVerdict lemma22_verdict(const Lemma22Result& result) {
  if (result.trace.size() < 2) {
    return MembershipVerdict::BoundedLike;
  }
  const double last = result.trace.back().value;
  const double prev = result.trace[result.trace.size() - 2].value;
  return last > kEscalationFactor * prev ? MembershipVerdict::UnboundedLike
                                         : MembershipVerdict::BoundedLike;
}

EscalationResult seminorm_escalation(const PowerSeries& f, double alpha, std::size_t n0) {
  if (n0 < 16 || n0 > f.truncation()) {
    throw std::invalid_argument("escalation start must satisfy 16 <= n0 <= N");
  }
  EscalationResult out;
  for (std::size_t n = n0; n <= f.truncation(); n *= 2) {
    out.truncations.push_back(n);
    out.values.push_back(bloch_seminorm(prefix(f, n), alpha).value);
  }
  for (std::size_t i = 1; i < out.values.size(); ++i) {
    if (out.values[i] > kEscalationFactor * out.values[i - 1]) {
      out.verdict = MembershipVerdict::UnboundedLike;
    }
  }
  return out;
}

PartialSumGrowth partial_sum_growth(const PowerSeries& f) {
  PartialSumGrowth out;
  CompensatedSum acc;
  for (std::size_t n = 1; n <= f.truncation(); ++n) {
    acc.add(f[n]);
    const double value = std::abs(acc.value()) / std::log(static_cast<double>(n) + 1.0);
    if (value > out.sup) {
      out.sup = value;
      out.argmax = n;
    }
  }
  return out;
}

double growth_bound_check(const PowerSeries& f, double alpha, double norm, int depth) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("growth_bound_check needs alpha > 0");
  }
  const int used_angles = effective_angles(f, kDefaultAngles);
  const int levels = std::min(depth, truncation_cap_level(f.truncation()));
  double worst = 0.0;
  for (int j = 0; j <= levels; ++j) {
    const double one_minus_r = std::ldexp(1.0, -j);
    const double r = 1.0 - one_minus_r;
    double bound = norm;
    if (alpha == 1.0) {
      bound = norm * std::log(2.0 / one_minus_r);
    } else if (alpha > 1.0) {
      bound = norm * std::pow(one_minus_r, 1.0 - alpha);
    }
    for (int k = 0; k < used_angles; ++k) {
      const double value = abs_at(f, r, 2.0 * std::numbers::pi * k / used_angles);
      if (value == 0.0) {
        continue;
      }
      if (bound == 0.0) {
        return std::numeric_limits<double>::infinity();
      }
      worst = std::max(worst, value / bound);
    }
  }
  return worst;
}

}  // namespace cesaro
