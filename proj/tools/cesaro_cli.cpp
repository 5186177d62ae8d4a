// Command-line front end: moments, Carleson classification, operator
// application, asymptotic scans and the boundedness/compactness probes.

#include "cesaro/asymptotics.hpp"
#include "cesaro/carleson.hpp"
#include "cesaro/io.hpp"
#include "cesaro/measure.hpp"
#include "cesaro/probes.hpp"
#include "cesaro/series.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace cesaro;

struct Options {
  std::string measure;
  std::string series;
  std::string out;
  std::string format = "csv";
  std::string kind = "full";
  std::size_t n_max = 0;
  std::size_t n = 0;
  double s = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double c = 0.0;
  double k = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  int depth = 0;
  int ladder_depth = kDefaultLadderDepth;
};

int run_moments(const Options& o) {
  const auto mu = moment_sequence(load_measure(o.measure), o.n_max);
  if (o.format == "json") {
    std::cout << moments_json(mu).dump(2) << '\n';
  } else {
    write_moments_csv(std::cout, mu);
  }
  return 0;
}

int run_carleson(const Options& o) {
  write_carleson_csv(std::cout, classify(load_measure(o.measure), o.s, o.gamma, o.depth));
  return 0;
}

int run_apply(const Options& o) {
  const auto m = load_measure(o.measure);
  const auto f = resolve_series(o.series, o.n);
  const auto b = cesaro_apply(m, f);
  std::ofstream out(o.out);
  if (!out) {
    throw InputError("cannot write " + o.out);
  }
  write_series(out, b);
  return 0;
}

int run_asymptotics(const Options& o) {
  write_scan_csv(std::cout, regime_scan(o.delta, o.c, o.k, o.depth));
  return 0;
}

int run_probe(const Options& o) {
  const auto m = load_measure(o.measure);
  if (o.kind == "full") {
    const auto report = full_report(m, o.alpha, o.beta, o.ladder_depth);
    std::cout << to_json(report).dump(2) << '\n';
    return exit_code(report.agreement);
  }
  const auto report = o.kind == "bounded" ? boundedness_probe(m, o.alpha, o.beta, o.ladder_depth)
                                          : compactness_probe(m, o.alpha, o.beta, o.ladder_depth);
  write_probe_csv(std::cout, report);
  return exit_code(report.agreement);
}

int run_verdict(const Options& o) {
  std::cout << to_json(theorem_verdict(load_measure(o.measure), o.alpha, o.beta)).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments for Cesaro-type operators on Bloch-type spaces"};
  app.require_subcommand(1);
  Options o;

  auto* moments = app.add_subcommand("moments", "moment sequence mu_0..mu_N");
  moments->add_option("--measure", o.measure, "measure spec (JSON)")->required()->check(CLI::ExistingFile);
  moments->add_option("--n-max", o.n_max, "largest moment index")->required();
  moments->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* carleson = app.add_subcommand("carleson", "tail-quotient Carleson classification");
  carleson->add_option("--measure", o.measure)->required()->check(CLI::ExistingFile);
  carleson->add_option("--s", o.s)->required();
  carleson->add_option("--gamma", o.gamma)->required();
  o.depth = kDefaultCarlesonDepth;
  carleson->add_option("--depth", o.depth)->capture_default_str();

  auto* apply = app.add_subcommand("apply", "apply C_mu to a series");
  apply->add_option("--measure", o.measure)->required()->check(CLI::ExistingFile);
  apply->add_option("--series", o.series, "builtin:<name>[:params] or a series file")->required();
  apply->add_option("--n", o.n, "truncation")->required();
  apply->add_option("--out", o.out)->required();

  auto* asymptotics = app.add_subcommand("asymptotics", "scan of the endpoint integral");
  asymptotics->add_option("--delta", o.delta)->required();
  asymptotics->add_option("--c", o.c)->required();
  asymptotics->add_option("--k", o.k)->required();
  asymptotics->add_option("--depth", o.depth, "deepest level (>= 10)")->required();

  auto* probe = app.add_subcommand("probe", "empirical boundedness/compactness probes");
  probe->add_option("--measure", o.measure)->required()->check(CLI::ExistingFile);
  probe->add_option("--alpha", o.alpha)->required();
  probe->add_option("--beta", o.beta)->required();
  probe->add_option("--depth", o.ladder_depth, "ladder depth (>= 4)")->capture_default_str();
  probe->add_option("--kind", o.kind)->check(CLI::IsMember({"bounded", "compact", "full"}))->capture_default_str();

  auto* verdict = app.add_subcommand("verdict", "predicted verdict from the Carleson class");
  verdict->add_option("--measure", o.measure)->required()->check(CLI::ExistingFile);
  verdict->add_option("--alpha", o.alpha)->required();
  verdict->add_option("--beta", o.beta)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*moments) return run_moments(o);
    if (*carleson) return run_carleson(o);
    if (*apply) return run_apply(o);
    if (*asymptotics) return run_asymptotics(o);
    if (*probe) return run_probe(o);
    if (*verdict) return run_verdict(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
