#include "cesaro/carleson.hpp"

#include "cesaro/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cesaro {

namespace {

// Verdict thresholds. The quotient conditions are asymptotic, so a finite
// grid needs declared tolerances; raw samples stay in the report.
constexpr double kGrowthSlope = 0.05;     // log2 q per level
constexpr double kPlateauBand = 0.20;     // relative variation
constexpr double kLogExponent = 0.25;     // |p| in q ~ log^p(e/(1-t))
constexpr double kMonotoneSlack = 1e-9;
constexpr double kMomentCap = 1e6;

double log_e_over(double one_minus_t) { return 1.0 - std::log(one_minus_t); }

}  // namespace

std::string_view to_string(CarlesonVerdict v) {
  switch (v) {
    case CarlesonVerdict::CarlesonBounded:
      return "carleson_bounded";
    case CarlesonVerdict::VanishingCarleson:
      return "vanishing_carleson";
    case CarlesonVerdict::NotCarleson:
      return "not_carleson";
    case CarlesonVerdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

double carleson_quotient(const MeasureSpec& m, double s, double gamma, double t) {
  const double tail = tail_mass(m, t);
  if (tail == 0.0) {
    return 0.0;
  }
  const double u = 1.0 - t;
  return tail * std::pow(log_e_over(u), gamma) / std::pow(u, s);
}

std::vector<std::uint64_t> dyadic_integers(int k) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i <= k; ++i) {
    out.push_back(std::uint64_t{1} << i);
  }
  return out;
}

CarlesonReport classify(const MeasureSpec& m, double s, double gamma, int depth) {
  if (depth < 8) {
    throw std::invalid_argument("classify needs depth >= 8");
  }
  CarlesonReport report;
  report.s = s;
  report.gamma = gamma;
  report.depth = depth;
  for (int j = 0; j <= depth; ++j) {
    const double t = 1.0 - std::ldexp(1.0, -j);
    report.grid.push_back({j, t, carleson_quotient(m, s, gamma, t)});
  }
  for (const auto& g : report.grid) {
    report.sup_estimate = std::max(report.sup_estimate, g.quotient);
  }

  const std::size_t mid = static_cast<std::size_t>(depth / 2);
  std::vector<double> levels;
  std::vector<double> q;
  for (std::size_t i = mid; i < report.grid.size(); ++i) {
    levels.push_back(report.grid[i].level);
    q.push_back(report.grid[i].quotient);
  }

  if (q.back() == 0.0) {
    // Tails are nonincreasing: once empty, the quotient stays 0.
    report.verdict = CarlesonVerdict::VanishingCarleson;
    report.limit_estimate = 0.0;
    report.tail_slope = -std::numeric_limits<double>::infinity();
    report.log_exponent = -std::numeric_limits<double>::infinity();
  } else {
    std::vector<double> log2q(q.size());
    std::vector<double> loglog(q.size());
    std::vector<double> logq(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      log2q[i] = std::log2(q[i]);
      logq[i] = std::log(q[i]);
      loglog[i] = std::log(log_e_over(std::ldexp(1.0, -static_cast<int>(levels[i]))));
    }
    report.tail_slope = fit_line(levels, log2q).slope;
    report.log_exponent = fit_line(loglog, logq).slope;

    const double variation = relative_variation(q);
    const bool halving = q.back() < 0.5 * q.front();
    const bool decreasing = nonincreasing(q, kMonotoneSlack);
    const bool increasing = nondecreasing(q, kMonotoneSlack);

    if (report.tail_slope >= kGrowthSlope ||
        (increasing && variation >= kPlateauBand && report.log_exponent >= kLogExponent)) {
      report.verdict = CarlesonVerdict::NotCarleson;
      report.limit_estimate = std::numeric_limits<double>::infinity();
    } else if (decreasing &&
               (halving || (variation >= kPlateauBand && report.log_exponent <= -kLogExponent))) {
      report.verdict = CarlesonVerdict::VanishingCarleson;
      report.limit_estimate = 0.0;
    } else if (variation < kPlateauBand) {
      report.verdict = CarlesonVerdict::CarlesonBounded;
      report.limit_estimate = q.back();
    } else {
      report.verdict = CarlesonVerdict::Inconclusive;
      report.limit_estimate = q.back();
    }
  }

  // Moment route on n = 1, 2, 4, ..., 2^ceil(depth*s), n <= 1e6.
  int k = static_cast<int>(std::ceil(depth * s));
  k = std::clamp(k, 0, static_cast<int>(std::floor(std::log2(kMomentCap))));
  const auto ns = dyadic_integers(k);
  std::vector<double> log2n;
  std::vector<double> log2v;
  for (const auto n : ns) {
    const double nd = static_cast<double>(n);
    const double value = std::pow(nd, s) * std::pow(std::log(nd + 1.0), gamma) * moment(m, n);
    report.moment_sup = std::max(report.moment_sup, value);
    if (value > 0.0) {
      log2n.push_back(std::log2(nd));
      log2v.push_back(std::log2(value));
    }
  }
  const std::size_t top = log2n.size() / 2;
  if (log2n.size() - top >= 2) {
    report.moment_slope =
        fit_line(std::span(log2n).subspan(top), std::span(log2v).subspan(top)).slope;
  } else {
    report.moment_slope = -std::numeric_limits<double>::infinity();
  }
  const bool moment_growth = report.moment_slope >= kGrowthSlope;
  report.moments_agree = report.verdict != CarlesonVerdict::Inconclusive &&
                         (report.verdict == CarlesonVerdict::NotCarleson) == moment_growth;
  return report;
}

MomentCarlesonResult moment_carleson_test(const MeasureSpec& m, double s,
                                          std::span<const std::uint64_t> n_grid) {
  if (n_grid.empty()) {
    throw std::invalid_argument("moment_carleson_test needs a nonempty grid");
  }
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1 || (i > 0 && n_grid[i] <= n_grid[i - 1])) {
      throw std::invalid_argument("n_grid must be strictly increasing with entries >= 1");
    }
  }
  MomentCarlesonResult result;
  std::vector<double> logn;
  std::vector<double> logmu;
  for (const auto n : n_grid) {
    const double nd = static_cast<double>(n);
    const double mu = moment(m, n);
    result.sup = std::max(result.sup, std::pow(nd, s) * mu);
    if (mu > 0.0) {
      logn.push_back(std::log(nd));
      logmu.push_back(std::log(mu));
    }
  }
  const std::size_t top = n_grid.size() / 2;
  const std::size_t start = std::min(top, logn.size());
  if (logn.size() - start >= 2) {
    result.fitted_exponent =
        fit_line(std::span(logn).subspan(start), std::span(logmu).subspan(start)).slope;
  } else {
    // Moments vanish on the top half: faster than any power.
    result.fitted_exponent = -std::numeric_limits<double>::infinity();
  }
  return result;
}

}  // namespace cesaro
