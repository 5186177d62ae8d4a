#include "cesaro/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cesaro {

PowerSeries::PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("power series needs at least one coefficient");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n])) {
      std::ostringstream msg;
      msg << "coefficient " << n << " is not finite";
      throw std::invalid_argument(msg.str());
    }
  }
}

PowerSeries PowerSeries::zero(std::size_t truncation) {
  return PowerSeries(std::vector<double>(truncation + 1, 0.0));
}

bool PowerSeries::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double a) { return a >= 0.0; });
}

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    correction_ += (sum_ - t) + x;
  } else {
    correction_ += (x - t) + sum_;
  }
  sum_ = t;
}

std::vector<double> partial_sums(const PowerSeries& f) {
  std::vector<double> out(f.truncation() + 1);
  CompensatedSum acc;
  for (std::size_t n = 0; n <= f.truncation(); ++n) {
    acc.add(f[n]);
    out[n] = acc.value();
  }
  return out;
}

PowerSeries cesaro_apply(std::span<const double> moments, const PowerSeries& f) {
  if (moments.size() < f.truncation() + 1) {
    throw std::invalid_argument("not enough moments for the series truncation");
  }
  std::vector<double> out(f.truncation() + 1);
  CompensatedSum acc;
  for (std::size_t n = 0; n <= f.truncation(); ++n) {
    acc.add(f[n]);
    out[n] = moments[n] * acc.value();
  }
  return PowerSeries(std::move(out));
}

PowerSeries cesaro_apply(const MeasureSpec& m, const PowerSeries& f) {
  const auto moments = moment_sequence(m, f.truncation());
  return cesaro_apply(moments, f);
}

PowerSeries cesaro_matrix_apply(const MeasureSpec& m, const PowerSeries& f) {
  const std::size_t size = f.truncation() + 1;
  if (f.truncation() > kMatrixPathMaxTruncation) {
    std::ostringstream msg;
    msg << "matrix reference path limited to N <= " << kMatrixPathMaxTruncation << ", got "
        << f.truncation();
    throw std::length_error(msg.str());
  }
  // Packed lower triangle: row n holds mu_n on columns 0..n.
  std::vector<double> matrix(size * (size + 1) / 2);
  for (std::size_t n = 0; n < size; ++n) {
    const double mu = moment(m, n);
    std::fill_n(matrix.begin() + static_cast<std::ptrdiff_t>(n * (n + 1) / 2), n + 1, mu);
  }
  std::vector<double> out(size, 0.0);
  for (std::size_t n = 0; n < size; ++n) {
    const double* row = matrix.data() + n * (n + 1) / 2;
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      acc += row[k] * f[k];
    }
    out[n] = acc;
  }
  return PowerSeries(std::move(out));
}

std::complex<double> evaluate(const PowerSeries& f, double radius, double angle) {
  const std::complex<double> z = std::polar(radius, angle);
  std::complex<double> acc = 0.0;
  for (std::size_t n = f.truncation() + 1; n-- > 0;) {
    acc = acc * z + f[n];
  }
  return acc;
}

PowerSeries derivative(const PowerSeries& f) {
  if (f.truncation() == 0) {
    return PowerSeries::zero(0);
  }
  std::vector<double> out(f.truncation());
  for (std::size_t n = 1; n <= f.truncation(); ++n) {
    out[n - 1] = static_cast<double>(n) * f[n];
  }
  return PowerSeries(std::move(out));
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  std::vector<double> out(std::max(f.truncation(), g.truncation()) + 1, 0.0);
  for (std::size_t n = 0; n <= f.truncation(); ++n) {
    out[n] += f[n];
  }
  for (std::size_t n = 0; n <= g.truncation(); ++n) {
    out[n] += g[n];
  }
  return PowerSeries(std::move(out));
}

PowerSeries operator*(double lambda, const PowerSeries& f) {
  std::vector<double> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : out) {
    a *= lambda;
  }
  return PowerSeries(std::move(out));
}

}  // namespace cesaro
