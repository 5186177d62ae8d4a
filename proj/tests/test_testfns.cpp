#include "oracles.hpp"

#include "cesaro/bloch.hpp"
#include "cesaro/testfns.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

using namespace cesaro;

namespace {

std::vector<double> coeffs(const PowerSeries& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

}  // namespace

TEST_CASE("power_alpha and log") {
  CHECK(coeffs(make_power_alpha(2.0, 3)) == std::vector<double>{0, 1, 1, 1});
  const auto lg = make_log(3);
  CHECK(lg[1] == 1.0);
  CHECK(lg[2] == 0.5);
  CHECK(lg[3] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(make_power_alpha(0.5, 2)[2] == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-15));
}

TEST_CASE("f_a family") {
  const auto g = make_fa(1.0, 0.5, 3);
  const std::vector<double> expect{0.5, 0.25, 0.125, 0.0625};
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(g[n] == doctest::Approx(expect[n]).epsilon(1e-14));
  }
  const auto b = make_fa(2.0, 0.5, 2);
  CHECK(b[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(b[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(b[2] == doctest::Approx(0.375).epsilon(1e-14));

  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    for (double a : {0.75, 0.99}) {
      const std::size_t n = min_truncation_for(a);
      const auto f = make_fa(alpha, a, n);
      const auto ref = oracle::fa(alpha, a, n);
      for (std::size_t k = 0; k <= n; k += 7) {
        CHECK(f[k] == doctest::Approx(ref[k]).epsilon(1e-11));
      }
      const double closed = (1.0 - a) / std::pow(1.0 - a * a, alpha);
      CHECK(evaluate(f, a, 0.0).real() == doctest::Approx(closed).epsilon(1e-9));
    }
  }
  CHECK(min_truncation_for(0.5) == 128);
  CHECK_THROWS_AS(make_fa(1.0, 1.0, 10), std::invalid_argument);
}

TEST_CASE("log squared family") {
  const double a = 0.9;
  const double norm = std::log(2.0 / (1.0 - a));
  const auto f = make_log_squared_a(a, 1000);
  CHECK(f[0] == doctest::Approx(std::numbers::ln2 * std::numbers::ln2 / norm).epsilon(1e-14));
  CHECK(f[1] == doctest::Approx(2.0 * std::numbers::ln2 * a / norm).epsilon(1e-14));
  CHECK(evaluate(f, 0.0, 0.0).real() == f[0]);

  // Closed form above the convolution limit matches the convolution oracle.
  const double b = 1.0 - 1.0 / 1024.0;
  const auto big = make_log_squared_a(b, 8192);
  const auto conv = log_squared_by_convolution(b, 8192);
  for (std::size_t n = 0; n <= 8192; n += 97) {
    CHECK(big[n] == doctest::Approx(conv[n]).epsilon(1e-12));
  }
  CHECK(evaluate(big, 0.5, 0.0).real() ==
        doctest::Approx(std::pow(std::log(2.0 / (1.0 - 0.5 * b)), 2) / std::log(2.0 / (1.0 - b)))
            .epsilon(1e-12));
}

TEST_CASE("basis, geometric and dispatch") {
  CHECK(coeffs(make_basis(0, 2)) == std::vector<double>{1, 0, 0});
  CHECK(coeffs(make_geometric(2)) == std::vector<double>{1, 1, 1});
  CHECK_THROWS_AS(make_basis(3, 2), std::invalid_argument);
  TestFamilySpec spec;
  spec.family = TestFamily::FA;
  spec.alpha = 2.0;
  spec.a = 0.5;
  spec.truncation = 2;
  CHECK(coeffs(make(spec)) == coeffs(make_fa(2.0, 0.5, 2)));
}

TEST_CASE("families have nonnegative coefficients") {
  CHECK(make_power_alpha(0.3, 500).nonnegative());
  CHECK(make_fa(0.7, 0.99, 6400).nonnegative());
  CHECK(make_log_squared_a(0.999, 64000).nonnegative());
  CHECK(make_log(10).nonnegative());
}

TEST_CASE("f_a family is uniformly bounded in B^alpha") {
  for (double alpha : {0.5, 2.0, 3.0}) {
    double lo = INFINITY;
    double hi = 0.0;
    for (int j = 2; j <= 10; ++j) {
      const double a = 1.0 - std::ldexp(1.0, -j);
      const auto v = bloch_seminorm(make_fa(alpha, a, 1 << 17), alpha).value;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(hi <= 2.0 * lo);
  }
}

TEST_CASE("power_alpha passes the coefficient-trace plateau") {
  for (double alpha : {0.25, 0.5, 0.75}) {
    CHECK(lemma22_verdict(lemma22_criterion(make_power_alpha(alpha, 1 << 16), alpha)) ==
          MembershipVerdict::BoundedLike);
  }
}
