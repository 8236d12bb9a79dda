#include "bohr/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "bohr/error.hpp"

namespace bohr::report {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

namespace {

void dump_into(const Json& value, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (value.is_object()) {
    if (value.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      dump_into(it.value(), indent + 1, out);
    }
    out += "\n" + pad + "}";
  } else if (value.is_array()) {
    if (value.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& element : value) {
      if (!first) out += ",\n";
      first = false;
      out += inner;
      dump_into(element, indent + 1, out);
    }
    out += "\n" + pad + "]";
  } else if (value.is_number_float()) {
    const double x = value.get<double>();
    out += std::isfinite(x) ? format_real(x) : Json(format_real(x)).dump();
  } else {
    out += value.dump();
  }
}

Json coordinates_json(const Frequency& f) {
  Json coords = Json::array();
  for (const auto& [symbol, q] : f.coords()) {
    coords.push_back({{"label", symbol->label()},
                      {"numerator", q.numerator().str()},
                      {"denominator", q.denominator().str()}});
  }
  return coords;
}

}  // namespace

std::string dump(const Json& value) {
  std::string out;
  dump_into(value, 0, out);
  out += "\n";
  return out;
}

Json frequency_json(const Frequency& f) {
  return {{"coordinates", coordinates_json(f)}, {"expression", f.to_string()}, {"value", f.value()}};
}

Json period_json(const Period& t) {
  return {{"multiplier", t.multiplier().to_string()},
          {"reference", coordinates_json(t.reference())},
          {"expression", t.to_string()},
          {"value", t.value()}};
}

Json module_json(const TranslationModule& module) {
  Json out;
  switch (module.kind()) {
    case TranslationModule::Kind::AllReals: out["kind"] = "AllReals"; break;
    case TranslationModule::Kind::Zero: out["kind"] = "Zero"; break;
    case TranslationModule::Kind::Cyclic: out["kind"] = "Cyclic"; break;
  }
  out["generator"] = module.generator() ? period_json(*module.generator()) : Json(nullptr);
  out["text"] = module.to_string();
  return out;
}

Json terms_json(const ExponentialSum& f) {
  Json terms = Json::array();
  for (const auto& term : f.terms()) {
    terms.push_back({{"re", format_real(term.coefficient.real())},
                     {"im", format_real(term.coefficient.imag())},
                     {"frequency", coordinates_json(term.frequency)},
                     {"exponent", term.frequency.to_string()},
                     {"value", term.frequency.value()},
                     {"class", term.frequency.sign() < 0 ? "unbounded" : "bounded"}});
  }
  return terms;
}

Json laurent_json(const LaurentSeries& series) {
  Json coefficients = Json::array();
  for (const auto& [n, a] : series.coefficients) {
    coefficients.push_back({{"n", n.str()}, {"re", format_real(a.real())}, {"im", format_real(a.imag())}});
  }
  return {{"period", period_json(series.period)},
          {"lambda", frequency_json(series.lambda)},
          {"coefficients", std::move(coefficients)}};
}

Json describe(const SumSpec& spec) {
  Json out;
  Json basis = Json::array();
  for (const auto& symbol : spec.basis.symbols()) {
    basis.push_back({{"label", symbol->label()}, {"value", symbol->decimal()}});
  }
  out["basis"] = std::move(basis);
  out["terms"] = terms_json(spec.sum);
  if (spec.kappa) out["guards"] = {{"kappa", *spec.kappa}};
  out["unbounded_count"] = unbounded_part(spec.sum).size();
  out["bounded_count"] = bounded_part(spec.sum).size();
  out["is_halfplane_ap"] = is_halfplane_ap(spec.sum);
  out["translation_module"] = module_json(translation_module(spec.sum));
  return out;
}

Json split(const SumSpec& spec, long long tau_multiple, bool allow_trivial) {
  if (tau_multiple < 1) throw Error(ErrorKind::InvalidTau, "tau multiple must be a positive integer");
  const auto module = translation_module(spec.sum);
  Json out;
  out["translation_module"] = module_json(module);
  out["tau_multiple"] = tau_multiple;
  if (allow_trivial && module.kind() == TranslationModule::Kind::AllReals) {
    out["tau"] = nullptr;
    out["periodic"] = Json::array();
    out["bounded"] = terms_json(spec.sum);
    out["laurent"] = nullptr;
    return out;
  }
  std::optional<Period> tau;
  if (module.generator()) tau = module.generator()->scaled(Rational(tau_multiple));
  const auto result = bohr_split(spec.sum, tau);
  out["tau"] = period_json(result.tau);
  out["periodic"] = terms_json(result.periodic);
  out["bounded"] = terms_json(result.bounded);
  out["laurent"] = laurent_json(laurent_parameters(result.periodic));
  return out;
}

std::string profile_csv(const ConvergenceProfile& profile) {
  std::ostringstream out;
  out << "k,maxError,alpha,beta,n\n";
  for (std::size_t i = 0; i < profile.k_values.size(); ++i) {
    out << profile.k_values[i] << ',' << format_real(profile.max_errors[i]) << ','
        << format_real(profile.strip.alpha()) << ',' << format_real(profile.strip.beta()) << ','
        << profile.sample_count << '\n';
  }
  return out.str();
}

Json scan(const StripScanReport& report) {
  return {{"epsilon", report.epsilon},
          {"strip", {{"alpha", report.strip.alpha()}, {"beta", report.strip.beta()}}},
          {"tau_max", report.tau_max},
          {"grid", {{"start", report.grid.start}, {"step", report.grid.step}, {"count", report.grid.count}}},
          {"certified_count", report.certified_taus.size()},
          {"certified_taus", report.certified_taus},
          {"max_gap", report.max_gap}};
}

std::string scan_csv(const StripScanReport& report) {
  std::ostringstream out;
  out << "tau,B,status\n";
  for (long long i = 0; i < report.grid.count; ++i) {
    const double tau = report.grid.start + report.grid.step * static_cast<double>(i);
    const double bound = report.bounds[static_cast<std::size_t>(i)];
    out << format_real(tau) << ',' << format_real(bound) << ','
        << (bound <= report.epsilon ? "Certified" : "Unknown") << '\n';
  }
  return out.str();
}

Json progression(double t, double epsilon, const Strip& strip, long long k_max, double gap) {
  return {{"t", t},
          {"epsilon", epsilon},
          {"strip", {{"alpha", strip.alpha()}, {"beta", strip.beta()}}},
          {"kmax", k_max},
          {"gap", gap}};
}

Json spectrum(const SpectrumEstimate& estimate) {
  Json entries = Json::array();
  for (const auto& entry : estimate.entries) {
    entries.push_back({{"frequency", entry.frequency},
                       {"re", entry.coefficient.real()},
                       {"im", entry.coefficient.imag()},
                       {"modulus", std::abs(entry.coefficient)},
                       {"leakage_bound", entry.leakage_bound}});
  }
  return {{"sigma", estimate.sigma},
          {"T", estimate.half_length},
          {"panels", estimate.panels},
          {"entries", std::move(entries)}};
}

}  // namespace bohr::report
