#pragma once

/// \file
/// Finite positive Borel measures on [0,1), given as a sum of components
/// with closed-form tails. Tails and moments of every measure in the lab
/// come from here.

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace cesaro {

struct Atom {
  double location = 0.0;  // in [0,1)
  double weight = 0.0;    // > 0
};

struct AtomicComponent {
  std::vector<Atom> atoms;
};

/// Lebesgue measure on [0,1), optionally scaled.
struct LebesgueComponent {
  double scale = 1.0;
};

/// Measure with tail h(t) = c (1-t)^s log^{-gamma}(e/(1-t)).
/// Requires s > 0, c > 0 and gamma >= -s (h nonincreasing).
struct PowerLogTailComponent {
  double s = 1.0;
  double gamma = 0.0;
  double c = 1.0;

  double tail(double t) const;
};

using MeasureComponent = std::variant<AtomicComponent, LebesgueComponent, PowerLogTailComponent>;

/// Immutable sum of validated components. Construction throws
/// std::invalid_argument naming the violated invariant.
class MeasureSpec {
public:
  explicit MeasureSpec(std::vector<MeasureComponent> components);

  static MeasureSpec lebesgue();
  static MeasureSpec atomic(std::vector<Atom> atoms);
  static MeasureSpec power_log_tail(double s, double gamma, double c = 1.0);

  const std::vector<MeasureComponent>& components() const noexcept { return components_; }

  /// mu([0,1)).
  double total_mass() const;

  /// lambda * mu, lambda > 0.
  MeasureSpec scaled(double lambda) const;

private:
  std::vector<MeasureComponent> components_;
};

void validate(const MeasureComponent& component);

/// Which route computes power-log-tail moments. `Auto` uses the Beta
/// closed form when gamma == 0; `Quadrature` always integrates the tail.
enum class MomentPath { Auto, Quadrature };

double tail_mass(const MeasureComponent& component, double t);
double tail_mass(const MeasureSpec& m, double t);

double moment(const MeasureComponent& component, std::uint64_t n,
              MomentPath path = MomentPath::Auto);
double moment(const MeasureSpec& m, std::uint64_t n, MomentPath path = MomentPath::Auto);

/// (mu_0, ..., mu_{n_max}). Quadrature-backed components share one node
/// set across all n.
std::vector<double> moment_sequence(const MeasureComponent& component, std::size_t n_max,
                                    MomentPath path = MomentPath::Auto);
std::vector<double> moment_sequence(const MeasureSpec& m, std::size_t n_max,
                                    MomentPath path = MomentPath::Auto);

}  // namespace cesaro
