#pragma once

/// \file
/// Measure spec files, the series exchange format and the table/JSON
/// writers behind the command-line tool.

#include "cesaro/asymptotics.hpp"
#include "cesaro/carleson.hpp"
#include "cesaro/measure.hpp"
#include "cesaro/probes.hpp"
#include "cesaro/series.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cesaro {

/// Malformed input files or generator names.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

MeasureSpec parse_measure(const nlohmann::json& doc);
MeasureSpec parse_measure(std::string_view text);
MeasureSpec load_measure(const std::filesystem::path& path);
nlohmann::json to_json(const MeasureSpec& m);

/// Text format: a `# truncation N` header then N+1 coefficients, one per line.
PowerSeries parse_series(std::string_view text);
PowerSeries load_series(const std::filesystem::path& path);
void write_series(std::ostream& os, const PowerSeries& f);

/// `builtin:geometric`, `builtin:log`, `builtin:power_alpha:<alpha>`,
/// `builtin:fa:<alpha>:<a>`; anything else is read as a file path.
PowerSeries resolve_series(std::string_view source, std::size_t truncation);

void write_moments_csv(std::ostream& os, std::span<const double> moments);
nlohmann::json moments_json(std::span<const double> moments);

/// Rows `j,t,quotient` followed by one `#summary,` row.
void write_carleson_csv(std::ostream& os, const CarlesonReport& report);
/// Rows `j,r,I,predicted,ratio` followed by one `#summary,` row.
void write_scan_csv(std::ostream& os, const AsymptoticScan& scan);
/// Rows `j,a,N,in_norm,out_norm,ratio` followed by one `#summary,` row.
void write_probe_csv(std::ostream& os, const ProbeReport& report);

nlohmann::json to_json(const CarlesonReport& report);
nlohmann::json to_json(const RegimeVerdict& verdict);
nlohmann::json to_json(const ProbeReport& report);
nlohmann::json to_json(const FullReport& report);

}  // namespace cesaro
