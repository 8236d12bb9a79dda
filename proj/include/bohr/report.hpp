#pragma once

// Deterministic JSON/CSV renderings of library results for the CLI. Reals are
// written with 17 significant digits; exact rationals as "p/q" strings.

#include <string>

#include <json.hpp>

#include "bohr/bohr_fourier.hpp"
#include "bohr/cesaro.hpp"
#include "bohr/splitting.hpp"
#include "bohr/sum_spec.hpp"
#include "bohr/translation_numbers.hpp"

namespace bohr::report {

using Json = nlohmann::ordered_json;

/// "%.17g"; non-finite values become "inf", "-inf" or "nan".
std::string format_real(double x);

/// Pretty-printed JSON (two-space indent, trailing newline) with reals
/// formatted by format_real. Non-finite reals are emitted as strings.
std::string dump(const Json& value);

Json frequency_json(const Frequency& f);
Json period_json(const Period& t);
Json module_json(const TranslationModule& module);
Json terms_json(const ExponentialSum& f);
Json laurent_json(const LaurentSeries& series);

Json describe(const SumSpec& spec);
/// bohr_split at tau = tau_multiple * generator. With allow_trivial, a bounded
/// f yields p = 0, b = f instead of Error(AlreadyBounded).
Json split(const SumSpec& spec, long long tau_multiple, bool allow_trivial);

std::string profile_csv(const ConvergenceProfile& profile);
Json scan(const StripScanReport& report);
std::string scan_csv(const StripScanReport& report);
Json progression(double t, double epsilon, const Strip& strip, long long k_max, double gap);
Json spectrum(const SpectrumEstimate& estimate);

}  // namespace bohr::report
