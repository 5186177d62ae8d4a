#pragma once

/// \file
/// Panel-based Gauss-Kronrod quadrature used by the moment and
/// integral-asymptotics code. Singular or sharply peaked integrands are
/// expected to be mapped to a smooth variable by the caller; this layer
/// only sums panels and keeps an honest error budget.

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cesaro {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Thrown when a quadrature cannot reach its tolerance. Carries the
/// achieved value and error estimate so callers can report them.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& what, double value, double error)
      : std::runtime_error(what), value_(value), error_(error) {}

  double value() const noexcept { return value_; }
  double error() const noexcept { return error_; }

private:
  double value_;
  double error_;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_floor = 1e-300;
  unsigned max_depth = 18;
};

/// Integrates f over consecutive panels [breaks[i], breaks[i+1]], bisecting
/// each until the G10/K21 difference is below rel_tol of the piece (at most
/// max_depth times). Throws QuadratureError
/// when the summed error estimate exceeds rel_tol * |value| + abs_floor.
QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  std::span<const double> breaks,
                                  const QuadratureOptions& opts = {});

/// Fixed composite rule: nodes and weights of a G10/K21 pair replicated
/// over the given panels. Used where many integrals share one node set.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> kronrod_weights;
  std::vector<double> gauss_weights;  // zero at Kronrod-only nodes
};

CompositeRule make_composite_rule(std::span<const double> breaks);

/// Uniform breakpoints of width at most `width` covering [a, b].
std::vector<double> uniform_breaks(double a, double b, double width);

}  // namespace cesaro
