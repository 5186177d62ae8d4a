#include "oracles.hpp"

#include "cesaro/asymptotics.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace cesaro;

TEST_CASE("endpoint integral closed forms") {
  CHECK(lemma24_integral(0.0, 1.0, 0.0, 0.9) == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(lemma24_integral(0.0, 0.0, 0.0, 0.5) ==
        doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-9));
  for (int j = 1; j <= 20; ++j) {
    const double r = 1.0 - std::ldexp(1.0, -j);
    CHECK(std::abs(lemma24_integral(0.0, 1.0, 0.0, r) * (1.0 - r) - 1.0) < 1e-8);
    CHECK(std::abs(lemma24_integral(0.0, 0.0, 0.0, r) * r / -std::log1p(-r) - 1.0) < 1e-8);
  }
  CHECK(lemma24_integral(0.0, 0.0, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("endpoint integral against tanh-sinh in t") {
  for (double delta : {-0.5, 0.0, 1.0}) {
    for (double c : {0.0, 0.5, 2.0}) {
      for (double k : {-2.0, -1.0, 1.0}) {
        for (double r : {0.3, 0.9, 0.99}) {
          const double ref = oracle::endpoint_integral(delta, c, k, r);
          CHECK_MESSAGE(std::abs(lemma24_integral(delta, c, k, r) / ref - 1.0) < 1e-8,
                        delta << " " << c << " " << k << " " << r);
        }
      }
    }
  }
}

TEST_CASE("regime dispatch") {
  CHECK(growth_regime(1.0, -3.0) == GrowthRegime::PowerLog);
  CHECK(growth_regime(0.0, -2.0) == GrowthRegime::Constant);
  CHECK(growth_regime(0.0, -1.0) == GrowthRegime::LogLog);
  CHECK(growth_regime(0.0, -0.5) == GrowthRegime::LogPower);
  CHECK(growth_regime(0.0, 0.0) == GrowthRegime::LogPower);
}

TEST_CASE("scans stabilize") {
  const auto bounded = regime_scan(1.0, 0.0, -2.0, 20);
  for (const auto& s : bounded.samples) {
    CHECK(s.value < 2.0);
  }
  CHECK(bounded.stabilized);

  const auto log_power = regime_scan(0.0, 0.0, 0.0, 20);
  CHECK(log_power.regime == GrowthRegime::LogPower);
  CHECK(std::abs(log_power.samples.back().ratio - 1.0) < 0.1);
  CHECK(log_power.stabilized);

  const auto loglog = regime_scan(0.0, 0.0, -1.0, 20);
  CHECK(loglog.regime == GrowthRegime::LogLog);
  CHECK(loglog.stabilized);
  CHECK(loglog.samples.back().ratio > 0.0);

  const auto power_log = regime_scan(0.5, 2.0, 1.0, 18);
  CHECK(power_log.regime == GrowthRegime::PowerLog);
  CHECK(power_log.stabilized);

  CHECK(bounded.samples.front().level == 5);
  CHECK_THROWS_AS(regime_scan(0.0, 0.0, 0.0, 9), std::invalid_argument);
}

TEST_CASE("endpoint integral is nondecreasing in r for nonnegative parameters") {
  for (double delta : {0.0, 0.5}) {
    for (double c : {0.0, 1.0}) {
      for (double k : {0.0, 2.0}) {
        double prev = 0.0;
        for (int j = 0; j <= 16; ++j) {
          const double v = lemma24_integral(delta, c, k, 1.0 - std::ldexp(1.0, -j));
          CHECK(v >= prev);
          prev = v;
        }
      }
    }
  }
}

TEST_CASE("endpoint integral rejects invalid input") {
  CHECK_THROWS_AS(lemma24_integral(-1.0, 0.0, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(lemma24_integral(0.0, -0.1, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(lemma24_integral(0.0, 0.0, 0.0, 1.0), std::domain_error);
}
