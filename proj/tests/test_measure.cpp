#include "oracles.hpp"

#include "cesaro/measure.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace cesaro;

TEST_CASE("tail mass of the canonical components") {
  CHECK(tail_mass(MeasureSpec::lebesgue(), 0.75) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(tail_mass(MeasureSpec::atomic({{0.5, 2.0}}), 0.6) == 0.0);
  CHECK(tail_mass(MeasureSpec::atomic({{0.5, 2.0}}), 0.5) == 2.0);
  CHECK(tail_mass(MeasureSpec::power_log_tail(1.0, 0.0), 0.9) ==
        doctest::Approx(0.1).epsilon(1e-14));
  CHECK_THROWS_AS(tail_mass(MeasureSpec::lebesgue(), 1.0), std::domain_error);
  CHECK_THROWS_AS(tail_mass(MeasureSpec::lebesgue(), -0.1), std::domain_error);
}

TEST_CASE("closed-form moments") {
  CHECK(moment(MeasureSpec::lebesgue(), 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(moment(MeasureSpec::lebesgue(), 7) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(moment(MeasureSpec::power_log_tail(2.0, 0.0), 3) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(moment(MeasureSpec::atomic({{0.5, 1.0}}), 10) ==
        doctest::Approx(std::pow(0.5, 10)).epsilon(1e-15));
  for (std::uint64_t n : {1ull, 10ull, 1000ull, 100000ull}) {
    CHECK(std::abs(moment(MeasureSpec::lebesgue(), n) * (n + 1.0) - 1.0) < 1e-12);
  }
}

TEST_CASE("moment sequences") {
  const auto leb = moment_sequence(MeasureSpec::lebesgue(), 3);
  REQUIRE(leb.size() == 4);
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(leb[n] == doctest::Approx(1.0 / (n + 1.0)).epsilon(1e-15));
  }
  const auto origin = moment_sequence(MeasureSpec::atomic({{0.0, 1.0}}), 2);
  CHECK(origin == std::vector<double>{1.0, 0.0, 0.0});

  const auto plt = moment_sequence(MeasureSpec::power_log_tail(1.0, 0.0), 4, MomentPath::Quadrature);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(std::abs(plt[n] * (n + 1.0) - 1.0) < 1e-12);
  }
}

TEST_CASE("PowerLogTail moments against the Beta product oracle") {
  for (double s : {0.5, 1.0, 2.0, 3.5}) {
    const auto m = MeasureSpec::power_log_tail(s, 0.0);
    for (std::uint64_t n : {0ull, 1ull, 2ull, 17ull, 300ull, 5000ull}) {
      const double ref = oracle::beta_moment(s, n);
      CHECK(std::abs(moment(m, n) / ref - 1.0) < 1e-12);
      CHECK(std::abs(moment(m, n, MomentPath::Quadrature) / ref - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("PowerLogTail log moments against tanh-sinh in t") {
  for (double s : {0.5, 1.0, 2.0}) {
    for (double gamma : {-0.5, 1.0, 1.5}) {
      if (gamma < -s) {
        continue;
      }
      const auto m = MeasureSpec::power_log_tail(s, gamma, 1.7);
      for (std::uint64_t n : {0ull, 1ull, 5ull, 64ull, 1000ull}) {
        const double ref = oracle::plt_moment(s, gamma, 1.7, n);
        CHECK_MESSAGE(std::abs(moment(m, n) / ref - 1.0) < 1e-9,
                      "s=" << s << " gamma=" << gamma << " n=" << n);
      }
    }
  }
}

TEST_CASE("batch moment path equals the single-n path") {
  const auto m = MeasureSpec::power_log_tail(1.0, 1.5, 0.5);
  const auto seq = moment_sequence(m, 4096);
  for (std::uint64_t n : {0ull, 1ull, 2ull, 63ull, 1024ull, 4096ull}) {
    CHECK(std::abs(seq[n] / moment(m, n) - 1.0) < 1e-10);
  }
}

TEST_CASE("large-n moments stay finite and positive") {
  const auto m = MeasureSpec::power_log_tail(2.0, 1.0);
  double prev = moment(m, 1000);
  for (std::uint64_t n : {10000ull, 100000ull, 1000000ull, 1ull << 25}) {
    const double mu = moment(m, n);
    CHECK(mu > 0.0);
    CHECK(mu < prev);
    prev = mu;
  }
  CHECK(std::abs(moment(MeasureSpec::power_log_tail(2.0, 0.0), 1000000) * 1e12 / 2.0 - 1.0) < 1e-5);
}

TEST_CASE("construction rejects invalid components") {
  CHECK_THROWS_AS(MeasureSpec::power_log_tail(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpec::power_log_tail(1.0, -1.5), std::invalid_argument);
  CHECK_NOTHROW(MeasureSpec::power_log_tail(1.0, -1.0));
  CHECK_THROWS_AS(MeasureSpec::power_log_tail(1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpec::atomic({{1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpec::atomic({{0.5, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpec::atomic({{-0.1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpec(std::vector<MeasureComponent>{}), std::invalid_argument);
}

TEST_CASE("total mass and scaling") {
  const MeasureSpec m({LebesgueComponent{}, AtomicComponent{{{0.25, 2.0}, {0.75, 0.5}}},
                       PowerLogTailComponent{2.0, 1.0, 3.0}});
  CHECK(m.total_mass() == doctest::Approx(1.0 + 2.5 + 3.0).epsilon(1e-14));
  CHECK(m.total_mass() == doctest::Approx(moment(m, 0)).epsilon(1e-14));
  const auto scaled = m.scaled(4.0);
  for (std::uint64_t n : {0ull, 3ull, 40ull}) {
    CHECK(moment(scaled, n) == doctest::Approx(4.0 * moment(m, n)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(m.scaled(0.0), std::invalid_argument);
}
