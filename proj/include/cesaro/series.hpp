#pragma once

/// \file
/// Truncated power series with real coefficients and the Cesaro-like
/// operator acting on them.

#include "cesaro/measure.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cesaro {

/// a_0..a_N, coefficient of z^n at index n. Always holds at least one
/// entry; all entries finite.
class PowerSeries {
public:
  explicit PowerSeries(std::vector<double> coeffs);

  static PowerSeries zero(std::size_t truncation);

  std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](std::size_t n) const { return coeffs_[n]; }

  bool nonnegative() const;

private:
  std::vector<double> coeffs_;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + correction_; }

private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

/// S_0..S_N with compensated accumulation.
std::vector<double> partial_sums(const PowerSeries& f);

/// b_n = mu_n * S_n in one prefix-sum pass.
PowerSeries cesaro_apply(const MeasureSpec& m, const PowerSeries& f);

/// Same, with moments mu_0..mu_N supplied by the caller (at least N+1).
PowerSeries cesaro_apply(std::span<const double> moments, const PowerSeries& f);

inline constexpr std::size_t kMatrixPathMaxTruncation = 4096;

/// Dense lower-triangular reference path; N <= kMatrixPathMaxTruncation.
PowerSeries cesaro_matrix_apply(const MeasureSpec& m, const PowerSeries& f);

/// f(radius * e^{i angle}) by Horner's scheme.
std::complex<double> evaluate(const PowerSeries& f, double radius, double angle);

/// (n a_n) shifted down by one; the derivative of a constant is the
/// zero series of truncation 0.
PowerSeries derivative(const PowerSeries& f);

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator*(double lambda, const PowerSeries& f);

}  // namespace cesaro
