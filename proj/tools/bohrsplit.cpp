// bohrsplit: Bohr splitting of exponential sums from the command line.
//
// Exit codes: 0 success, 1 parse/validation error, 2 not almost periodic,
// 3 numeric failure.

#include <charconv>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bohr/error.hpp"
#include "bohr/report.hpp"

namespace {

using bohr::Error;
using bohr::ErrorKind;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    items.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

template <typename T>
T parse_number(const std::string& text, const char* option) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::Parse, std::string(option) + ": malformed number '" + text + "'");
  }
  return value;
}

std::vector<double> parse_reals(const std::string& text, const char* option) {
  std::vector<double> values;
  for (const auto& item : split_list(text)) values.push_back(parse_number<double>(item, option));
  return values;
}

bohr::Strip parse_strip(const std::string& text) {
  auto bounds = parse_reals(text, "--strip");
  if (bounds.size() != 2) throw Error(ErrorKind::Parse, "--strip: expected 'alpha,beta'");
  if (!(bounds[0] < bounds[1])) throw Error(ErrorKind::Validation, "--strip: alpha must be less than beta");
  return bohr::Strip(bounds[0], bounds[1]);
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, std::string(what) + " is not finite");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAlmostPeriodic: return 2;
    case ErrorKind::NonFinite: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bohr splitting f = p + b of almost periodic exponential sums", "bohrsplit"};
  app.require_subcommand(1);

  std::string spec_path;
  long long tau_multiple = 1;
  bool allow_trivial = false;
  std::string k_list = "100,1000,10000";
  std::string strip_text = "0.5,1";
  int samples = 100;
  double epsilon = 0.0;
  double tau_max = 0.0;
  double step = 0.0;
  bool csv = false;
  double t = 0.0;
  long long k_max = 100000;
  std::string candidates;
  double sigma = 0.5;
  double half_length = 1000.0;
  long long panels = 1000000;

  auto* describe = app.add_subcommand("describe", "Canonical terms, classification and translation module");
  describe->add_option("spec", spec_path, "Sum specification (JSON)")->required();

  auto* split = app.add_subcommand("split", "Split f = p + b and report the Laurent parameters of p");
  split->add_option("spec", spec_path, "Sum specification (JSON)")->required();
  split->add_option("--tau-multiple", tau_multiple, "Use tau = k * generator of T_f")->capture_default_str();
  split->add_flag("--allow-trivial", allow_trivial, "Accept bounded f and return p = 0, b = f");

  auto* cesaro = app.add_subcommand("cesaro", "Cesaro-average convergence profile against the symbolic split (CSV)");
  cesaro->add_option("spec", spec_path, "Sum specification (JSON)")->required();
  cesaro->add_option("--tau-multiple", tau_multiple, "Use tau = k * generator of T_f")->capture_default_str();
  cesaro->add_option("--k-list", k_list, "Ascending averaging lengths")->capture_default_str();
  cesaro->add_option("--strip", strip_text, "Strip alpha,beta")->capture_default_str();
  cesaro->add_option("-n", samples, "Halton sample points in the strip")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "Certify translation numbers on the grid {0, +-step, ..., +-tauMax}");
  scan->add_option("spec", spec_path, "Sum specification (JSON)")->required();
  scan->add_option("--epsilon", epsilon, "Tolerance epsilon > 0")->required();
  scan->add_option("--strip", strip_text, "Strip alpha,beta")->capture_default_str();
  scan->add_option("--tau-max", tau_max, "Grid half-width")->required();
  scan->add_option("--step", step, "Grid step")->required();
  scan->add_flag("--csv", csv, "Emit tau,B,status rows instead of the JSON report");

  auto* progression = app.add_subcommand("progression", "Largest gap in {t k} intersected with the certified set");
  progression->add_option("spec", spec_path, "Sum specification (JSON)")->required();
  progression->add_option("--t", t, "Progression step t > 0")->required();
  progression->add_option("--epsilon", epsilon, "Tolerance epsilon > 0")->required();
  progression->add_option("--strip", strip_text, "Strip alpha,beta")->capture_default_str();
  progression->add_option("--kmax", k_max, "Check k in [-kmax, kmax]")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Recover coefficients at candidate frequencies by vertical means");
  spectrum->add_option("spec", spec_path, "Sum specification (JSON)")->required();
  spectrum->add_option("--candidates", candidates, "Comma-separated candidate frequencies")->required();
  spectrum->add_option("--sigma", sigma, "Abscissa of the vertical line")->capture_default_str();
  spectrum->add_option("--T", half_length, "Half-length of the averaging interval")->capture_default_str();
  spectrum->add_option("--panels", panels, "Trapezoid panels")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto spec = bohr::load_sum_spec(spec_path);
    if (describe->parsed()) {
      std::cout << bohr::report::dump(bohr::report::describe(spec));
    } else if (split->parsed()) {
      std::cout << bohr::report::dump(bohr::report::split(spec, tau_multiple, allow_trivial));
    } else if (cesaro->parsed()) {
      if (tau_multiple < 1) throw Error(ErrorKind::InvalidTau, "--tau-multiple must be positive");
      const auto module = bohr::translation_module(spec.sum);
      if (module.kind() == bohr::TranslationModule::Kind::Zero) {
        throw Error(ErrorKind::NotAlmostPeriodic, "unbounded frequencies are incommensurable, T_f = {0}");
      }
      if (!module.generator()) throw Error(ErrorKind::AlreadyBounded, "f has no unbounded term");
      std::vector<long long> ks;
      for (const auto& item : split_list(k_list)) ks.push_back(parse_number<long long>(item, "--k-list"));
      for (long long k : ks) {
        if (k < 1) throw Error(ErrorKind::Validation, "--k-list: entries must be positive");
      }
      if (samples < 1) throw Error(ErrorKind::Validation, "-n must be positive");
      const auto profile = bohr::convergence_profile(spec.sum, module.generator()->scaled(bohr::Rational(tau_multiple)),
                                                     ks, parse_strip(strip_text), samples);
      for (double e : profile.max_errors) require_finite(e, "Cesaro error");
      std::cout << bohr::report::profile_csv(profile);
    } else if (scan->parsed()) {
      const auto report = bohr::scan_translations(spec.sum, epsilon, parse_strip(strip_text), tau_max, step);
      for (double b : report.bounds) require_finite(b, "translation bound");
      std::cout << (csv ? bohr::report::scan_csv(report) : bohr::report::dump(bohr::report::scan(report)));
    } else if (progression->parsed()) {
      const auto strip = parse_strip(strip_text);
      const double gap = bohr::progression_intersection_gap(spec.sum, t, epsilon, strip, k_max);
      std::cout << bohr::report::dump(bohr::report::progression(t, epsilon, strip, k_max, gap));
    } else if (spectrum->parsed()) {
      const auto estimate =
          bohr::recover_spectrum(spec.sum, parse_reals(candidates, "--candidates"), sigma, half_length, panels);
      std::cout << bohr::report::dump(bohr::report::spectrum(estimate));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}
