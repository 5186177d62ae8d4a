#include "cesaro/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <sstream>

namespace cesaro {

namespace {

using Kronrod21 = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss10 = boost::math::quadrature::gauss<double, 10>;

}  // namespace

namespace {

struct PanelEstimate {
  double kronrod = 0.0;
  double gauss = 0.0;
};

// One G10/K21 pass over [a, b], both results scaled to the panel width.
PanelEstimate gk21(const std::function<double(double)>& f, double a, double b) {
  const auto& kx = Kronrod21::abscissa();
  const auto& kw = Kronrod21::weights();
  const auto& gw = Gauss10::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  PanelEstimate e;
  e.kronrod = kw[0] * f(mid);
  // Gauss-10 has no center node; Kronrod abscissas alternate between
  // Gauss-only-extension (even i) and shared Gauss nodes (odd i).
  for (std::size_t i = 1; i < kx.size(); ++i) {
    const double sum = f(mid - half * kx[i]) + f(mid + half * kx[i]);
    e.kronrod += kw[i] * sum;
    if (i % 2 == 1) {
      e.gauss += gw[i / 2] * sum;
    }
  }
  e.kronrod *= half;
  e.gauss *= half;
  return e;
}

// Bisection until |K - G| <= rel_tol |K| + abs_floor on every piece.
// |K - G| bounds the error of the 10-point rule, so it overstates the
// error of the returned 21-point value.
void adaptive(const std::function<double(double)>& f, double a, double b, unsigned depth,
              const QuadratureOptions& opts, QuadratureResult& acc) {
  const auto e = gk21(f, a, b);
  const double err = std::abs(e.kronrod - e.gauss);
  if (err <= opts.rel_tol * std::abs(e.kronrod) + opts.abs_floor || depth == 0) {
    acc.value += e.kronrod;
    acc.error += err;
    return;
  }
  const double mid = 0.5 * (a + b);
  adaptive(f, a, mid, depth - 1, opts, acc);
  adaptive(f, mid, b, depth - 1, opts, acc);
}

}  // namespace

QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  std::span<const double> breaks,
                                  const QuadratureOptions& opts) {
  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) {
      adaptive(f, breaks[i], breaks[i + 1], opts.max_depth, opts, total);
    }
  }
  if (!std::isfinite(total.value) ||
      total.error > opts.rel_tol * std::abs(total.value) + opts.abs_floor) {
    std::ostringstream msg;
    msg << "quadrature did not converge: value " << total.value << ", error estimate "
        << total.error;
    throw QuadratureError(msg.str(), total.value, total.error);
  }
  return total;
}

CompositeRule make_composite_rule(std::span<const double> breaks) {
  const auto& kx = Kronrod21::abscissa();
  const auto& kw = Kronrod21::weights();
  const auto& gx = Gauss10::abscissa();
  const auto& gw = Gauss10::weights();

  // Gauss weight at each non-negative Kronrod abscissa (0 where the node is
  // Kronrod-only).
  std::vector<double> half_gauss(kx.size(), 0.0);
  for (std::size_t i = 0; i < kx.size(); ++i) {
    for (std::size_t g = 0; g < gx.size(); ++g) {
      if (std::abs(kx[i] - gx[g]) < 1e-14) {
        half_gauss[i] = gw[g];
      }
    }
  }

  CompositeRule rule;
  const std::size_t per_panel = 2 * kx.size() - 1;
  const std::size_t panels = breaks.empty() ? 0 : breaks.size() - 1;
  rule.nodes.reserve(panels * per_panel);
  rule.kronrod_weights.reserve(panels * per_panel);
  rule.gauss_weights.reserve(panels * per_panel);

  for (std::size_t p = 0; p < panels; ++p) {
    const double a = breaks[p];
    const double b = breaks[p + 1];
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    // Ascending order within the panel: negative abscissas first.
    for (std::size_t i = kx.size() - 1; i >= 1; --i) {
      rule.nodes.push_back(mid - half * kx[i]);
      rule.kronrod_weights.push_back(half * kw[i]);
      rule.gauss_weights.push_back(half * half_gauss[i]);
    }
    rule.nodes.push_back(mid);
    rule.kronrod_weights.push_back(half * kw[0]);
    rule.gauss_weights.push_back(half * half_gauss[0]);
    for (std::size_t i = 1; i < kx.size(); ++i) {
      rule.nodes.push_back(mid + half * kx[i]);
      rule.kronrod_weights.push_back(half * kw[i]);
      rule.gauss_weights.push_back(half * half_gauss[i]);
    }
  }
  return rule;
}

std::vector<double> uniform_breaks(double a, double b, double width) {
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / width)));
  std::vector<double> out(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(panels);
  }
  out.back() = b;
  return out;
}

}  // namespace cesaro
