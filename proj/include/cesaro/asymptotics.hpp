#pragma once

/// \file
/// I_r(delta, c, k) = int_0^1 (1-t)^delta / (1-tr)^{delta+c+1} log^k(e/(1-t)) dt
/// and ratio scans of its growth as r -> 1 against the four predicted
/// regimes.

#include <string_view>
#include <vector>

namespace cesaro {

enum class GrowthRegime { Constant, LogLog, LogPower, PowerLog };

std::string_view to_string(GrowthRegime r);

/// c = 0, k < -1 -> Constant; c = 0, k = -1 -> LogLog; c = 0, k > -1 ->
/// LogPower; c > 0 -> PowerLog.
GrowthRegime growth_regime(double c, double k);

/// Predicted order of growth of I_r in the given regime.
double predicted_growth(GrowthRegime regime, double c, double k, double r);

/// I_r to relative 1e-8. Requires delta > -1, c >= 0, r in [0,1).
double lemma24_integral(double delta, double c, double k, double r);

struct ScanSample {
  int level = 0;  // r = 1 - 2^{-level}
  double r = 0.0;
  double value = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
};

struct AsymptoticScan {
  double delta = 0.0;
  double c = 0.0;
  double k = 0.0;
  GrowthRegime regime = GrowthRegime::Constant;
  std::vector<ScanSample> samples;
  bool stabilized = false;  // ratio band over the final three samples < 15%
};

/// Samples r_j = 1 - 2^{-j}, j = 5..depth; depth >= 10.
AsymptoticScan regime_scan(double delta, double c, double k, int depth);

}  // namespace cesaro
