#include "cesaro/measure.hpp"

#include "cesaro/quadrature.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cesaro {

namespace {

constexpr double kMomentRelTol = 1e-10;
constexpr double kPanelWidth = 0.5;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_unit_interval(double t) {
  if (!(t >= 0.0 && t < 1.0)) {
    std::ostringstream msg;
    msg << "t = " << t << " is outside [0,1)";
    throw std::domain_error(msg.str());
  }
}

// In u = -log(1-t) the moment integral n * int t^{n-1} h(t) dt becomes
// n * int (1-e^{-u})^{n-1} g(u) du with g(u) = c e^{-(s+1)u} (1+u)^{-gamma}.
double plt_weight(const PowerLogTailComponent& p, double u) {
  return p.c * std::exp(-(p.s + 1.0) * u) * std::pow(1.0 + u, -p.gamma);
}

// Right end of the u-range beyond which the integrand is negligible
// relative to the moment itself.
double plt_upper_limit(const PowerLogTailComponent& p, double n) {
  const double log_n = std::log(std::max(n, 1.0));
  const double rate = p.s + 1.0;
  double u = log_n + 10.0;
  const double scale = p.c * std::exp(-p.s * log_n) * std::pow(1.0 + log_n, -p.gamma);
  for (int guard = 0; guard < 100000; ++guard) {
    const double bound = n * plt_weight(p, u) / (rate - std::max(0.0, -p.gamma) / (1.0 + u));
    if (bound < 1e-18 * scale) {
      return u;
    }
    u += 1.0;
  }
  return u;
}

double plt_moment_quadrature(const PowerLogTailComponent& p, std::uint64_t n) {
  if (n == 0) {
    return p.tail(0.0);
  }
  const double nd = static_cast<double>(n);
  const double lower = std::max(0.0, std::log(nd) - 6.0);
  const double upper = plt_upper_limit(p, nd);
  const auto breaks = uniform_breaks(lower, upper, kPanelWidth);
  const auto integrand = [&](double u) {
    // log(1 - e^{-u}) without forming 1 - e^{-u}, which loses digits for large u.
    const double power = n == 1 ? 1.0 : std::exp((nd - 1.0) * std::log1p(-std::exp(-u)));
    return power * plt_weight(p, u);
  };
  QuadratureOptions opts;
  opts.rel_tol = kMomentRelTol;
  return nd * integrate_panels(integrand, breaks, opts).value;
}

std::vector<double> plt_moments_shared_nodes(const PowerLogTailComponent& p, std::size_t n_max) {
  std::vector<double> out(n_max + 1, 0.0);
  out[0] = p.tail(0.0);
  if (n_max == 0) {
    return out;
  }
  const double upper = plt_upper_limit(p, static_cast<double>(n_max));
  const auto rule = make_composite_rule(uniform_breaks(0.0, upper, kPanelWidth));
  const std::size_t size = rule.nodes.size();

  std::vector<double> base(size);
  std::vector<double> g(size);
  std::vector<double> power(size, 1.0);
  for (std::size_t i = 0; i < size; ++i) {
    base[i] = -std::expm1(-rule.nodes[i]);
    g[i] = plt_weight(p, rule.nodes[i]);
  }

  // power[i] = base[i]^{n-1} is increasing in i, so entries that underflow
  // form a prefix which is skipped from then on.
  std::size_t first = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    double kronrod = 0.0;
    double gauss = 0.0;
    for (std::size_t i = first; i < size; ++i) {
      const double term = power[i] * g[i];
      kronrod += rule.kronrod_weights[i] * term;
      gauss += rule.gauss_weights[i] * term;
    }
    const double nd = static_cast<double>(n);
    const double value = nd * kronrod;
    const double error = nd * std::abs(kronrod - gauss);
    if (error > kMomentRelTol * value + 1e-300) {
      std::ostringstream msg;
      msg << "moment quadrature for n = " << n << " did not converge: value " << value
          << ", error estimate " << error;
      throw QuadratureError(msg.str(), value, error);
    }
    out[n] = value;
    for (std::size_t i = first; i < size; ++i) {
      power[i] *= base[i];
    }
    while (first < size && power[first] < 1e-280) {
      power[first] = 0.0;
      ++first;
    }
  }
  return out;
}

// c * s * B(n+1, s) = c * Gamma(s+1) * Gamma(n+1) / Gamma(n+1+s).
double plt_moment_closed(const PowerLogTailComponent& p, std::uint64_t n) {
  const double nd = static_cast<double>(n);
  return p.c * boost::math::tgamma(p.s + 1.0) * boost::math::tgamma_delta_ratio(nd + 1.0, p.s);
}

bool use_closed_form(const PowerLogTailComponent& p, MomentPath path) {
  return path == MomentPath::Auto && p.gamma == 0.0;
}

}  // namespace

double PowerLogTailComponent::tail(double t) const {
  const double u = 1.0 - t;
  return c * std::pow(u, s) * std::pow(1.0 - std::log(u), -gamma);
}

void validate(const MeasureComponent& component) {
  std::visit(overloaded{
                 [](const AtomicComponent& a) {
                   if (a.atoms.empty()) {
                     throw std::invalid_argument("atomic component needs at least one atom");
                   }
                   for (const auto& atom : a.atoms) {
                     if (!(atom.location >= 0.0 && atom.location < 1.0)) {
                       throw std::invalid_argument(
                           "atom location must lie in [0,1) (no mass at 1)");
                     }
                     if (!(atom.weight > 0.0) || !std::isfinite(atom.weight)) {
                       throw std::invalid_argument("atom weight must be finite and > 0");
                     }
                   }
                 },
                 [](const LebesgueComponent& l) {
                   if (!(l.scale > 0.0) || !std::isfinite(l.scale)) {
                     throw std::invalid_argument("lebesgue scale must be finite and > 0");
                   }
                 },
                 [](const PowerLogTailComponent& p) {
                   if (!(p.s > 0.0) || !std::isfinite(p.s)) {
                     throw std::invalid_argument("power_log_tail requires s > 0");
                   }
                   if (!(p.c > 0.0) || !std::isfinite(p.c)) {
                     throw std::invalid_argument("power_log_tail requires c > 0");
                   }
                   if (!std::isfinite(p.gamma) || p.gamma < -p.s) {
                     throw std::invalid_argument(
                         "power_log_tail requires gamma >= -s (tail must be nonincreasing)");
                   }
                 },
             },
             component);
}

MeasureSpec::MeasureSpec(std::vector<MeasureComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("measure needs at least one component");
  }
  for (const auto& c : components_) {
    validate(c);
  }
}

MeasureSpec MeasureSpec::lebesgue() { return MeasureSpec({LebesgueComponent{}}); }

MeasureSpec MeasureSpec::atomic(std::vector<Atom> atoms) {
  return MeasureSpec({AtomicComponent{std::move(atoms)}});
}

MeasureSpec MeasureSpec::power_log_tail(double s, double gamma, double c) {
  return MeasureSpec({PowerLogTailComponent{s, gamma, c}});
}

double MeasureSpec::total_mass() const { return tail_mass(*this, 0.0); }

MeasureSpec MeasureSpec::scaled(double lambda) const {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("measure scale factor must be > 0");
  }
  std::vector<MeasureComponent> out;
  out.reserve(components_.size());
  for (const auto& comp : components_) {
    out.push_back(std::visit(overloaded{
                                 [&](AtomicComponent a) -> MeasureComponent {
                                   for (auto& atom : a.atoms) {
                                     atom.weight *= lambda;
                                   }
                                   return a;
                                 },
                                 [&](LebesgueComponent l) -> MeasureComponent {
                                   l.scale *= lambda;
                                   return l;
                                 },
                                 [&](PowerLogTailComponent p) -> MeasureComponent {
                                   p.c *= lambda;
                                   return p;
                                 },
                             },
                             comp));
  }
  return MeasureSpec(std::move(out));
}

double tail_mass(const MeasureComponent& component, double t) {
  check_unit_interval(t);
  return std::visit(overloaded{
                        [&](const AtomicComponent& a) {
                          double sum = 0.0;
                          for (const auto& atom : a.atoms) {
                            if (atom.location >= t) {
                              sum += atom.weight;
                            }
                          }
                          return sum;
                        },
                        [&](const LebesgueComponent& l) { return l.scale * (1.0 - t); },
                        [&](const PowerLogTailComponent& p) { return p.tail(t); },
                    },
                    component);
}

double tail_mass(const MeasureSpec& m, double t) {
  check_unit_interval(t);
  double sum = 0.0;
  for (const auto& c : m.components()) {
    sum += tail_mass(c, t);
  }
  return sum;
}

double moment(const MeasureComponent& component, std::uint64_t n, MomentPath path) {
  return std::visit(overloaded{
                        [&](const AtomicComponent& a) {
                          double sum = 0.0;
                          for (const auto& atom : a.atoms) {
                            sum += atom.weight * std::pow(atom.location, static_cast<double>(n));
                          }
                          return sum;
                        },
                        [&](const LebesgueComponent& l) {
                          return l.scale / (static_cast<double>(n) + 1.0);
                        },
                        [&](const PowerLogTailComponent& p) {
                          return use_closed_form(p, path) ? plt_moment_closed(p, n)
                                                          : plt_moment_quadrature(p, n);
                        },
                    },
                    component);
}

double moment(const MeasureSpec& m, std::uint64_t n, MomentPath path) {
  double sum = 0.0;
  for (const auto& c : m.components()) {
    sum += moment(c, n, path);
  }
  return sum;
}

std::vector<double> moment_sequence(const MeasureComponent& component, std::size_t n_max,
                                    MomentPath path) {
  return std::visit(
      overloaded{
          [&](const AtomicComponent& a) {
            std::vector<double> out(n_max + 1, 0.0);
            for (const auto& atom : a.atoms) {
              double power = 1.0;
              for (std::size_t n = 0; n <= n_max && (power > 0.0 || n == 0); ++n) {
                out[n] += atom.weight * power;
                power *= atom.location;
              }
            }
            return out;
          },
          [&](const LebesgueComponent& l) {
            std::vector<double> out(n_max + 1);
            for (std::size_t n = 0; n <= n_max; ++n) {
              out[n] = l.scale / (static_cast<double>(n) + 1.0);
            }
            return out;
          },
          [&](const PowerLogTailComponent& p) {
            if (!use_closed_form(p, path)) {
              return plt_moments_shared_nodes(p, n_max);
            }
            std::vector<double> out(n_max + 1);
            for (std::size_t n = 0; n <= n_max; ++n) {
              out[n] = plt_moment_closed(p, n);
            }
            return out;
          },
      },
      component);
}

std::vector<double> moment_sequence(const MeasureSpec& m, std::size_t n_max, MomentPath path) {
  std::vector<double> out(n_max + 1, 0.0);
  for (const auto& c : m.components()) {
    const auto part = moment_sequence(c, n_max, path);
    for (std::size_t n = 0; n <= n_max; ++n) {
      out[n] += part[n];
    }
  }
  return out;
}

}  // namespace cesaro
