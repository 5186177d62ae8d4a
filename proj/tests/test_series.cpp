#include "oracles.hpp"

#include "cesaro/series.hpp"
#include "cesaro/testfns.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

using namespace cesaro;

TEST_CASE("partial sums") {
  CHECK(partial_sums(make_geometric(3)) == std::vector<double>{1, 2, 3, 4});
  const auto h = partial_sums(make_log(6));
  double harmonic = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    harmonic += 1.0 / n;
    CHECK(h[n] == doctest::Approx(harmonic).epsilon(1e-15));
  }
  const auto alt = partial_sums(PowerSeries({1, -1, 1, -1, 1}));
  CHECK(alt == std::vector<double>{1, 0, 1, 0, 1});
}

TEST_CASE("compensated summation keeps small terms") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) {
    s.add(1e-16);
  }
  CHECK(s.value() == doctest::Approx(1.0 + 1e-13).epsilon(1e-15));
}

TEST_CASE("cesaro_apply on closed-form cases") {
  const auto leb = MeasureSpec::lebesgue();
  const auto b = cesaro_apply(leb, make_geometric(8));
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(b[n] == doctest::Approx(1.0).epsilon(1e-15));
  }

  const auto m = MeasureSpec::power_log_tail(1.5, 1.0);
  const auto mu = moment_sequence(m, 10);
  const auto one = cesaro_apply(m, make_basis(0, 10));
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(one[n] == doctest::Approx(mu[n]).epsilon(1e-15));
  }

  const double t0 = 0.3;
  std::mt19937_64 rng(11);
  const auto a = oracle::random_series(rng, 20);
  const auto atom = cesaro_apply(MeasureSpec::atomic({{t0, 1.0}}), PowerSeries(a));
  double s = 0.0;
  for (std::size_t n = 0; n <= 20; ++n) {
    s += a[n];
    CHECK(atom[n] == doctest::Approx(std::pow(t0, n) * s).epsilon(1e-12));
  }

  const auto e1 = cesaro_apply(leb, make_basis(1, 6));
  CHECK(e1[0] == 0.0);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(e1[n] == doctest::Approx(1.0 / (n + 1.0)).epsilon(1e-15));
  }

  const auto origin = cesaro_apply(MeasureSpec::atomic({{0.0, 1.0}}), PowerSeries(a));
  CHECK(origin[0] == a[0]);
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(origin[n] == 0.0);
  }
}

TEST_CASE("cesaro_apply matches the long double oracle") {
  std::mt19937_64 rng(7);
  const auto m = MeasureSpec::power_log_tail(0.5, 1.0, 2.0);
  const auto mu = moment_sequence(m, 2000);
  const auto a = oracle::random_series(rng, 2000);
  const auto ref = oracle::cesaro(mu, a);
  const auto b = cesaro_apply(m, PowerSeries(a));
  double scale = 0.0;
  for (std::size_t n = 0; n <= 2000; ++n) {
    scale += std::abs(a[n]);
    CHECK(std::abs(b[n] - ref[n]) <= 1e-14 * mu[n] * scale);
  }
}

TEST_CASE("matrix path") {
  const auto m = MeasureSpec::lebesgue();
  const auto f = make_log(64);
  const auto fast = cesaro_apply(m, f);
  const auto slow = cesaro_matrix_apply(m, f);
  for (std::size_t n = 0; n <= 64; ++n) {
    CHECK(slow[n] == doctest::Approx(fast[n]).epsilon(1e-13));
  }
  CHECK_THROWS_AS(cesaro_matrix_apply(m, make_geometric(kMatrixPathMaxTruncation + 1)),
                  std::length_error);
}

TEST_CASE("evaluate") {
  const auto g = make_geometric(60);
  const auto v = evaluate(g, 0.5, 0.0);
  CHECK(std::abs(v.real() - 2.0) < 1e-15);
  CHECK(v.imag() == 0.0);
  const auto c = evaluate(PowerSeries({1.0}), 0.7, 1.3);
  CHECK(c == std::complex<double>(1.0, 0.0));
  const auto z = evaluate(make_basis(1, 1), 0.3, std::numbers::pi);
  CHECK(z.real() == doctest::Approx(-0.3).epsilon(1e-15));
  CHECK(std::abs(z.imag()) < 1e-16);
}

TEST_CASE("derivative") {
  const auto d = derivative(make_basis(2, 2));
  REQUIRE(d.truncation() == 1);
  CHECK(d[0] == 0.0);
  CHECK(d[1] == 2.0);
  const auto z = derivative(PowerSeries({3.0}));
  CHECK(z.truncation() == 0);
  CHECK(z[0] == 0.0);
  const auto g = derivative(make_geometric(5));
  CHECK(std::vector<double>(g.coeffs().begin(), g.coeffs().end()) ==
        std::vector<double>{1, 2, 3, 4, 5});
}

TEST_CASE("series arithmetic and validation") {
  const auto s = PowerSeries({1, 2}) + PowerSeries({1, 1, 1});
  CHECK(std::vector<double>(s.coeffs().begin(), s.coeffs().end()) == std::vector<double>{2, 3, 1});
  const auto t = 2.0 * PowerSeries({1, -1});
  CHECK(t[1] == -2.0);
  CHECK_THROWS_AS(PowerSeries(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(PowerSeries({1.0, NAN}), std::invalid_argument);
  CHECK(make_geometric(3).nonnegative());
  CHECK_FALSE(PowerSeries({1, -1}).nonnegative());
}
