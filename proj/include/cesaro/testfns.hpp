#pragma once

/// \file
/// Coefficient generators for the test-function families used by the
/// boundedness and compactness probes. All families have nonnegative
/// coefficients.

#include "cesaro/series.hpp"

#include <cstddef>
#include <string_view>

namespace cesaro {

enum class TestFamily { PowerAlpha, FA, Log, LogSquaredA, Geometric, Basis };

std::string_view to_string(TestFamily family);

struct TestFamilySpec {
  TestFamily family = TestFamily::Geometric;
  double alpha = 1.0;       // PowerAlpha, FA
  double a = 0.5;           // FA, LogSquaredA; in (0,1)
  std::size_t index = 0;    // Basis
  std::size_t truncation = 0;
};

/// Smallest truncation allowed for the a-parameterized families.
std::size_t min_truncation_for(double a);

/// a_0 = 0, a_n = n^{alpha-2}.
PowerSeries make_power_alpha(double alpha, std::size_t truncation);

/// a_n = 1/n for n >= 1: log(1/(1-z)).
PowerSeries make_log(std::size_t truncation);

/// Taylor coefficients of (1-a)/(1-az)^alpha, via log-gamma.
PowerSeries make_fa(double alpha, double a, std::size_t truncation);

/// Taylor coefficients of log^2(2/(1-az)) / log(2/(1-a)).
PowerSeries make_log_squared_a(double a, std::size_t truncation);

/// Same family by direct Cauchy self-convolution of log(2/(1-az)); O(N^2).
PowerSeries log_squared_by_convolution(double a, std::size_t truncation);

PowerSeries make_geometric(std::size_t truncation);
PowerSeries make_basis(std::size_t index, std::size_t truncation);

PowerSeries make(const TestFamilySpec& spec);

}  // namespace cesaro
