#pragma once

/// \file
/// End-to-end checks of when C_mu maps B^alpha into B^beta boundedly or
/// compactly: the verdict predicted from the measure's Carleson class,
/// empirical norm ladders over test-function families, and their
/// agreement.

#include "cesaro/carleson.hpp"
#include "cesaro/measure.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cesaro {

/// Partition of alpha, beta > 0:
///   T31: 0 < alpha < 1, 0 < beta < 2
///   T32: alpha > 1, 0 < beta < alpha + 1
///   T33: alpha = 1, 0 < beta <= 2
///   AlwaysBounded: everything else.
enum class Regime { T31, T32, T33, AlwaysBounded };

enum class Prediction { Yes, No, UnconditionalYes, Unknown };

std::string_view to_string(Regime r);
std::string_view to_string(Prediction p);

Regime regime_for(double alpha, double beta);

struct RegimeVerdict {
  double alpha = 0.0;
  double beta = 0.0;
  Regime regime = Regime::AlwaysBounded;
  std::string required_condition;
  Prediction predicted_bounded = Prediction::Unknown;
  Prediction predicted_compact = Prediction::Unknown;
  /// Classification behind the prediction; absent for AlwaysBounded.
  std::optional<CarlesonReport> carleson;
};

RegimeVerdict theorem_verdict(const MeasureSpec& m, double alpha, double beta,
                              int carleson_depth = kDefaultCarlesonDepth);

enum class EmpiricalVerdict { BoundedLike, UnboundedLike, CompactLike, NoncompactLike, Inconclusive };
enum class Agreement { Agree, Inconclusive, Contradiction };

std::string_view to_string(EmpiricalVerdict v);
std::string_view to_string(Agreement a);

struct LadderRung {
  int level = 0;  // a = 1 - 2^{-level}
  double a = 0.0;
  std::size_t truncation = 0;
  double in_norm = 0.0;
  double out_norm = 0.0;
  double ratio = 0.0;
};

struct CoefficientProbe {
  std::vector<std::size_t> n;
  std::vector<double> trace;  // n^{-beta} sum_{k<=n} k b_k
  double slope = 0.0;         // log2 trace vs log2 n, top half
  double log_exponent = 0.0;  // p in trace ~ log^p(e n), top half
  bool log_growth = false;
};

enum class ProbeKind { Boundedness, Compactness };

struct ProbeReport {
  ProbeKind kind = ProbeKind::Boundedness;
  std::string family;
  std::vector<LadderRung> ladder;
  /// Slope of log2 ratio (boundedness) or log2 out_norm (compactness)
  /// against the level, over all rungs.
  double ladder_slope = 0.0;
  /// Exponent p in ratio (boundedness) or out_norm (compactness)
  /// ~ log^p(e/(1-a)), last half of the ladder.
  double log_exponent = 0.0;
  std::optional<CoefficientProbe> coefficient;
  double fitted_exponent = 0.0;
  EmpiricalVerdict empirical_verdict = EmpiricalVerdict::Inconclusive;
  Agreement agreement = Agreement::Inconclusive;
};

inline constexpr int kDefaultLadderDepth = 10;

/// Truncation used at rung j: 64 * 2^j.
std::size_t ladder_truncation(int level);

ProbeReport boundedness_probe(const MeasureSpec& m, double alpha, double beta,
                              int ladder_depth = kDefaultLadderDepth);
ProbeReport compactness_probe(const MeasureSpec& m, double alpha, double beta,
                              int ladder_depth = kDefaultLadderDepth);

/// Variants with precomputed moments (at least ladder_truncation(depth)+1)
/// and a precomputed verdict.
ProbeReport boundedness_probe(std::span<const double> moments, double alpha, double beta,
                              int ladder_depth, const RegimeVerdict& verdict);
ProbeReport compactness_probe(std::span<const double> moments, double alpha, double beta,
                              int ladder_depth, const RegimeVerdict& verdict);

Agreement bounded_agreement(Prediction predicted, EmpiricalVerdict empirical);
Agreement compact_agreement(Prediction predicted, EmpiricalVerdict empirical);

template <class T>
struct Section {
  std::optional<T> value;
  std::string error;  // empty when value is set
};

struct FullReport {
  double alpha = 0.0;
  double beta = 0.0;
  double total_mass = 0.0;
  Section<RegimeVerdict> verdict;
  Section<CarlesonReport> carleson;
  Section<ProbeReport> boundedness;
  Section<ProbeReport> compactness;
  Agreement agreement = Agreement::Inconclusive;
};

FullReport full_report(const MeasureSpec& m, double alpha, double beta,
                       int ladder_depth = kDefaultLadderDepth);

/// 0 when nothing contradicts, 2 on a confident contradiction.
int exit_code(Agreement overall);

}  // namespace cesaro
