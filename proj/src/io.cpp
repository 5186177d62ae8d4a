#include "cesaro/io.hpp"

#include "cesaro/testfns.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace cesaro {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_keys(const json& obj, const std::set<std::string>& allowed, std::string_view where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) {
      throw InputError("unknown field '" + key + "' in " + std::string(where));
    }
  }
}

double number_field(const json& obj, const char* key, std::string_view where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(std::string(where) + " is missing '" + key + "'");
  }
  if (!it->is_number()) {
    throw InputError(std::string(where) + " field '" + key + "' must be a number");
  }
  return it->get<double>();
}

MeasureComponent parse_component(const json& c) {
  if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string()) {
    throw InputError("each component needs a string 'kind'");
  }
  const auto kind = c["kind"].get<std::string>();
  if (kind == "lebesgue") {
    check_keys(c, {"kind"}, "lebesgue component");
    return LebesgueComponent{};
  }
  if (kind == "atomic") {
    check_keys(c, {"kind", "atoms"}, "atomic component");
    if (!c.contains("atoms") || !c["atoms"].is_array()) {
      throw InputError("atomic component needs an 'atoms' array");
    }
    AtomicComponent atomic;
    for (const auto& a : c["atoms"]) {
      if (!a.is_object()) {
        throw InputError("atoms must be objects {\"t\":..,\"w\":..}");
      }
      check_keys(a, {"t", "w"}, "atom");
      atomic.atoms.push_back({number_field(a, "t", "atom"), number_field(a, "w", "atom")});
    }
    return atomic;
  }
  if (kind == "power_log_tail") {
    check_keys(c, {"kind", "s", "gamma", "c"}, "power_log_tail component");
    PowerLogTailComponent p;
    p.s = number_field(c, "s", "power_log_tail component");
    p.gamma = c.contains("gamma") ? number_field(c, "gamma", "power_log_tail component") : 0.0;
    p.c = c.contains("c") ? number_field(c, "c", "power_log_tail component") : 1.0;
    return p;
  }
  throw InputError("unknown component kind '" + kind + "'");
}

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      return parts;
    }
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct PrecisionGuard {
  explicit PrecisionGuard(std::ostream& os) : os(os), flags(os.flags()), precision(os.precision()) {
    os << std::setprecision(17);
  }
  ~PrecisionGuard() {
    os.flags(flags);
    os.precision(precision);
  }
  std::ostream& os;
  std::ios::fmtflags flags;
  std::streamsize precision;
};

}  // namespace

MeasureSpec parse_measure(const json& doc) {
  if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array()) {
    throw InputError("measure spec needs a 'components' array");
  }
  check_keys(doc, {"components"}, "measure spec");
  std::vector<MeasureComponent> components;
  for (const auto& c : doc["components"]) {
    components.push_back(parse_component(c));
  }
  try {
    return MeasureSpec(std::move(components));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid measure: ") + e.what());
  }
}

MeasureSpec parse_measure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("measure spec is not valid JSON: ") + e.what());
  }
  return parse_measure(doc);
}

MeasureSpec load_measure(const std::filesystem::path& path) {
  return parse_measure(std::string_view(read_file(path)));
}

json to_json(const MeasureSpec& m) {
  json components = json::array();
  for (const auto& component : m.components()) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, AtomicComponent>) {
            json atoms = json::array();
            for (const auto& a : c.atoms) {
              atoms.push_back({{"t", a.location}, {"w", a.weight}});
            }
            components.push_back({{"kind", "atomic"}, {"atoms", atoms}});
          } else if constexpr (std::is_same_v<T, LebesgueComponent>) {
            if (c.scale == 1.0) {
              components.push_back({{"kind", "lebesgue"}});
            } else {
              // Scaled Lebesgue has no file syntax; the equivalent power tail does.
              components.push_back(
                  {{"kind", "power_log_tail"}, {"s", 1.0}, {"gamma", 0.0}, {"c", c.scale}});
            }
          } else {
            components.push_back(
                {{"kind", "power_log_tail"}, {"s", c.s}, {"gamma", c.gamma}, {"c", c.c}});
          }
        },
        component);
  }
  return {{"components", components}};
}

PowerSeries parse_series(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<double> coeffs;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      constexpr std::string_view key = "truncation";
      if (body.starts_with(key)) {
        const auto value = trim(body.substr(key.size()));
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc{} || ptr != value.data() + value.size()) {
          throw InputError("bad truncation header on line " + std::to_string(line_no));
        }
        declared = n;
      }
      continue;
    }
    coeffs.push_back(parse_double(line, "coefficient on line " + std::to_string(line_no)));
  }
  if (!declared) {
    throw InputError("series file lacks a '# truncation N' header");
  }
  if (coeffs.size() != *declared + 1) {
    throw InputError("series header declares truncation " + std::to_string(*declared) +
                     " but the file holds " + std::to_string(coeffs.size()) + " coefficients");
  }
  try {
    return PowerSeries(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid series: ") + e.what());
  }
}

PowerSeries load_series(const std::filesystem::path& path) {
  return parse_series(read_file(path));
}

void write_series(std::ostream& os, const PowerSeries& f) {
  PrecisionGuard guard(os);
  os << "# truncation " << f.truncation() << '\n';
  for (double c : f.coeffs()) {
    os << c << '\n';
  }
}

PowerSeries resolve_series(std::string_view source, std::size_t truncation) {
  constexpr std::string_view prefix = "builtin:";
  if (!source.starts_with(prefix)) {
    PowerSeries f = load_series(std::filesystem::path(std::string(source)));
    if (f.truncation() < truncation) {
      throw InputError("series file truncation " + std::to_string(f.truncation()) +
                       " is below the requested " + std::to_string(truncation));
    }
    return PowerSeries(std::vector<double>(f.coeffs().begin(),
                                           f.coeffs().begin() + truncation + 1));
  }
  const auto parts = split(source.substr(prefix.size()), ':');
  const auto name = parts.front();
  const auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) {
      throw InputError("builtin:" + std::string(name) + " takes " + std::to_string(n) +
                       " parameter(s)");
    }
  };
  try {
    if (name == "geometric") {
      arity(0);
      return make_geometric(truncation);
    }
    if (name == "log") {
      arity(0);
      return make_log(truncation);
    }
    if (name == "power_alpha") {
      arity(1);
      return make_power_alpha(parse_double(parts[1], "alpha"), truncation);
    }
    if (name == "fa") {
      arity(2);
      const double alpha = parse_double(parts[1], "alpha");
      const double a = parse_double(parts[2], "a");
      const std::size_t need = min_truncation_for(a);
      if (truncation < need) {
        throw InputError("builtin:fa with a = " + std::string(parts[2]) +
                         " needs truncation >= 64/(1-a) = " + std::to_string(need));
      }
      return make_fa(alpha, a, truncation);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("unknown generator '" + std::string(source) + "'");
}

void write_moments_csv(std::ostream& os, std::span<const double> moments) {
  PrecisionGuard guard(os);
  os << "n,mu_n\n";
  for (std::size_t n = 0; n < moments.size(); ++n) {
    os << n << ',' << moments[n] << '\n';
  }
}

json moments_json(std::span<const double> moments) {
  return {{"n_max", moments.empty() ? 0 : moments.size() - 1},
          {"moments", std::vector<double>(moments.begin(), moments.end())}};
}

void write_carleson_csv(std::ostream& os, const CarlesonReport& r) {
  PrecisionGuard guard(os);
  os << "j,t,quotient\n";
  for (const auto& g : r.grid) {
    os << g.level << ',' << g.t << ',' << g.quotient << '\n';
  }
  os << "#summary,s=" << r.s << ",gamma=" << r.gamma << ",sup=" << r.sup_estimate
     << ",limit=" << r.limit_estimate << ",tail_slope=" << r.tail_slope
     << ",log_exponent=" << r.log_exponent << ",moment_sup=" << r.moment_sup
     << ",moment_slope=" << r.moment_slope << ",moments_agree=" << std::boolalpha
     << r.moments_agree << ",verdict=" << to_string(r.verdict) << '\n';
}

void write_scan_csv(std::ostream& os, const AsymptoticScan& scan) {
  PrecisionGuard guard(os);
  os << "j,r,I,predicted,ratio\n";
  for (const auto& s : scan.samples) {
    os << s.level << ',' << s.r << ',' << s.value << ',' << s.predicted << ',' << s.ratio << '\n';
  }
  os << "#summary,delta=" << scan.delta << ",c=" << scan.c << ",k=" << scan.k
     << ",regime=" << to_string(scan.regime) << ",stabilized=" << std::boolalpha
     << scan.stabilized << '\n';
}

void write_probe_csv(std::ostream& os, const ProbeReport& r) {
  PrecisionGuard guard(os);
  os << "j,a,N,in_norm,out_norm,ratio\n";
  for (const auto& rung : r.ladder) {
    os << rung.level << ',' << rung.a << ',' << rung.truncation << ',' << rung.in_norm << ','
       << rung.out_norm << ',' << rung.ratio << '\n';
  }
  os << "#summary,kind=" << (r.kind == ProbeKind::Boundedness ? "bounded" : "compact")
     << ",family=" << r.family << ",ladder_slope=" << r.ladder_slope;
  os << ",log_exponent=" << r.log_exponent;
  if (r.coefficient) {
    os << ",coefficient_slope=" << r.coefficient->slope
       << ",coefficient_log_exponent=" << r.coefficient->log_exponent;
  }
  os << ",fitted_exponent=" << r.fitted_exponent << ",verdict=" << to_string(r.empirical_verdict)
     << ",agreement=" << to_string(r.agreement) << '\n';
}

json to_json(const CarlesonReport& r) {
  json grid = json::array();
  for (const auto& g : r.grid) {
    grid.push_back({{"j", g.level}, {"t", g.t}, {"quotient", g.quotient}});
  }
  return {{"s", r.s},
          {"gamma", r.gamma},
          {"depth", r.depth},
          {"grid", grid},
          {"sup_estimate", r.sup_estimate},
          {"limit_estimate", r.limit_estimate},
          {"tail_slope", r.tail_slope},
          {"log_exponent", r.log_exponent},
          {"moment_sup", r.moment_sup},
          {"moment_slope", r.moment_slope},
          {"moments_agree", r.moments_agree},
          {"verdict", to_string(r.verdict)}};
}

json to_json(const RegimeVerdict& v) {
  json out = {{"alpha", v.alpha},
              {"beta", v.beta},
              {"regime", to_string(v.regime)},
              {"required_condition", v.required_condition},
              {"predicted_bounded", to_string(v.predicted_bounded)},
              {"predicted_compact", to_string(v.predicted_compact)}};
  if (v.carleson) {
    out["carleson_verdict"] = to_string(v.carleson->verdict);
  }
  return out;
}

json to_json(const ProbeReport& r) {
  json ladder = json::array();
  for (const auto& rung : r.ladder) {
    ladder.push_back({{"j", rung.level},
                      {"a", rung.a},
                      {"N", rung.truncation},
                      {"in_norm", rung.in_norm},
                      {"out_norm", rung.out_norm},
                      {"ratio", rung.ratio}});
  }
  json out = {{"kind", r.kind == ProbeKind::Boundedness ? "bounded" : "compact"},
              {"family", r.family},
              {"ladder", ladder},
              {"ladder_slope", r.ladder_slope},
              {"log_exponent", r.log_exponent},
              {"fitted_exponent", r.fitted_exponent},
              {"empirical_verdict", to_string(r.empirical_verdict)},
              {"agreement", to_string(r.agreement)}};
  if (r.coefficient) {
    out["coefficient"] = {{"n", r.coefficient->n},
                          {"trace", r.coefficient->trace},
                          {"slope", r.coefficient->slope},
                          {"log_exponent", r.coefficient->log_exponent},
                          {"log_growth", r.coefficient->log_growth}};
  }
  return out;
}

namespace {

template <class T>
json section_json(const Section<T>& s) {
  if (s.value) {
    return {{"status", "ok"}, {"result", to_json(*s.value)}};
  }
  return {{"status", "error"}, {"error", s.error}};
}

}  // namespace

json to_json(const FullReport& r) {
  json agreement = {{"overall", to_string(r.agreement)}};
  if (r.verdict.value) {
    agreement["predicted_bounded"] = to_string(r.verdict.value->predicted_bounded);
    agreement["predicted_compact"] = to_string(r.verdict.value->predicted_compact);
  }
  if (r.boundedness.value) {
    agreement["empirical_bounded"] = to_string(r.boundedness.value->empirical_verdict);
    agreement["bounded"] = to_string(r.boundedness.value->agreement);
  }
  if (r.compactness.value) {
    agreement["empirical_compact"] = to_string(r.compactness.value->empirical_verdict);
    agreement["compact"] = to_string(r.compactness.value->agreement);
  }
  return {{"alpha", r.alpha},
          {"beta", r.beta},
          {"total_mass", r.total_mass},
          {"verdict", section_json(r.verdict)},
          {"carleson", section_json(r.carleson)},
          {"boundedness", section_json(r.boundedness)},
          {"compactness", section_json(r.compactness)},
          {"agreement", agreement}};
}

}  // namespace cesaro
