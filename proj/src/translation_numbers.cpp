#include "bohr/translation_numbers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bohr/error.hpp"
#include "bohr/sampling.hpp"
#include "bohr/splitting.hpp"

namespace bohr {

const char* to_string(CertificationResult::Status status) {
  switch (status) {
    case CertificationResult::Status::Certified: return "Certified";
    case CertificationResult::Status::Refuted: return "Refuted";
    case CertificationResult::Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

// |a| max(e^{-mu alpha}, e^{-mu beta}) for every term.
std::vector<double> strip_weights(const ExponentialSum& f, const Strip& strip) {
  std::vector<double> weights;
  weights.reserve(f.size());
  for (const auto& term : f.terms()) {
    const double mu = term.frequency.value();
    weights.push_back(std::abs(term.coefficient) *
                      std::max(std::exp(-mu * strip.alpha()), std::exp(-mu * strip.beta())));
  }
  return weights;
}

// |e^{-i x} - 1| = 2 |sin(x / 2)|
double rotation_defect(double x) { return 2.0 * std::abs(std::sin(x / 2.0)); }

CertificationResult from_bound(double bound, double epsilon) {
  CertificationResult result;
  if (bound <= epsilon) {
    result.status = CertificationResult::Status::Certified;
    result.certified_bound = bound;
  }
  return result;
}

// Per-term data for exact certification along t*k: a term is resonant at t*k
// iff its denominator divides k. A zero denominator marks a term that is never
// resonant.
struct ProgressionTerm {
  double weight;
  double mu_t;
  BigInt denominator;
};

double gap_of(const std::vector<long long>& certified, double t) {
  if (certified.size() < 2) return std::numeric_limits<double>::infinity();
  long long widest = 0;
  for (std::size_t i = 1; i < certified.size(); ++i) widest = std::max(widest, certified[i] - certified[i - 1]);
  return static_cast<double>(widest) * t;
}

}  // namespace

double translation_bound(const ExponentialSum& f, double tau, const Strip& strip) {
  const auto weights = strip_weights(f, strip);
  double bound = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    bound += weights[j] * rotation_defect(f.terms()[j].frequency.value() * tau);
  }
  return bound;
}

double translation_bound(const ExponentialSum& f, const Period& tau, const Strip& strip) {
  const auto weights = strip_weights(f, strip);
  double bound = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const auto& mu = f.terms()[j].frequency;
    if (is_period_multiple(mu, tau)) continue;
    bound += weights[j] * rotation_defect(mu.value() * tau.value());
  }
  return bound;
}

CertificationResult certify_translation_strip(const ExponentialSum& f, double tau, double epsilon,
                                              const Strip& strip, std::optional<int> refutation_samples) {
  require(epsilon > 0.0, "certify_translation_strip: epsilon must be positive");
  auto result = from_bound(translation_bound(f, tau, strip), epsilon);
  if (result.status == CertificationResult::Status::Unknown && refutation_samples) {
    return refute_translation_strip(f, tau, epsilon, strip, *refutation_samples);
  }
  return result;
}

CertificationResult certify_translation_strip(const ExponentialSum& f, const Period& tau, double epsilon,
                                              const Strip& strip) {
  require(epsilon > 0.0, "certify_translation_strip: epsilon must be positive");
  return from_bound(translation_bound(f, tau, strip), epsilon);
}

CertificationResult refute_translation_strip(const ExponentialSum& f, double tau, double epsilon,
                                             const Strip& strip, int m) {
  require(epsilon > 0.0, "refute_translation_strip: epsilon must be positive");
  require(m >= 1, "refute_translation_strip: need at least one sample");
  CertificationResult result;
  const double threshold = epsilon * (1.0 + 1e-9);
  for (const auto& s : strip_samples(strip, kStripSampleExtent, m)) {
    const Complex shifted = evaluate(f, {s.sigma, s.t + tau});
    if (std::abs(shifted - evaluate(f, s)) > threshold) {
      result.status = CertificationResult::Status::Refuted;
      result.witness = s;
      return result;
    }
  }
  return result;
}

StripScanReport scan_translations(const ExponentialSum& f, double epsilon, const Strip& strip, double tau_max,
                                  double step) {
  require(epsilon > 0.0, "scan_translations: epsilon must be positive");
  require(step > 0.0, "scan_translations: step must be positive");
  require(tau_max > step, "scan_translations: tauMax must exceed step");
  const auto half = static_cast<long long>(std::floor(tau_max / step * (1.0 + 1e-12)));
  StripScanReport report{epsilon, strip, tau_max, {-static_cast<double>(half) * step, step, 2 * half + 1}, {}, 0.0, {}};
  const auto weights = strip_weights(f, strip);
  report.bounds.reserve(static_cast<std::size_t>(report.grid.count));
  for (long long i = -half; i <= half; ++i) {
    const double tau = static_cast<double>(i) * step;
    double bound = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      bound += weights[j] * rotation_defect(f.terms()[j].frequency.value() * tau);
    }
    report.bounds.push_back(bound);
    if (bound <= epsilon) report.certified_taus.push_back(tau);
  }
  double previous = -tau_max;
  for (double tau : report.certified_taus) {
    report.max_gap = std::max(report.max_gap, tau - previous);
    previous = tau;
  }
  report.max_gap = std::max(report.max_gap, tau_max - previous);
  return report;
}

double progression_intersection_gap(const ExponentialSum& f, double t, double epsilon, const Strip& strip,
                                    long long k_max) {
  require(t > 0.0, "progression_intersection_gap: t must be positive");
  require(epsilon > 0.0, "progression_intersection_gap: epsilon must be positive");
  require(k_max >= 1, "progression_intersection_gap: kMax must be positive");
  const auto weights = strip_weights(f, strip);
  std::vector<long long> certified;
  for (long long k = -k_max; k <= k_max; ++k) {
    const double tau = static_cast<double>(k) * t;
    double bound = 0.0;
    for (std::size_t j = 0; j < weights.size() && bound <= epsilon; ++j) {
      bound += weights[j] * rotation_defect(f.terms()[j].frequency.value() * tau);
    }
    if (bound <= epsilon) certified.push_back(k);
  }
  return gap_of(certified, t);
}

double progression_intersection_gap(const ExponentialSum& f, const Period& t, double epsilon, const Strip& strip,
                                    long long k_max) {
  require(epsilon > 0.0, "progression_intersection_gap: epsilon must be positive");
  require(k_max >= 1, "progression_intersection_gap: kMax must be positive");
  const auto weights = strip_weights(f, strip);
  std::vector<ProgressionTerm> terms;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const auto& mu = f.terms()[j].frequency;
    ProgressionTerm term{weights[j], mu.value() * t.value(), 0};
    if (mu.is_zero()) {
      term.denominator = 1;
    } else if (auto r = rational_ratio(mu, t.reference())) {
      term.denominator = (t.multiplier() * *r).denominator();
    }
    terms.push_back(std::move(term));
  }
  std::vector<long long> certified;
  for (long long k = -k_max; k <= k_max; ++k) {
    double bound = 0.0;
    for (const auto& term : terms) {
      if (!term.denominator.is_zero() && (BigInt(k) % term.denominator).is_zero()) continue;
      bound += term.weight * rotation_defect(term.mu_t * static_cast<double>(k));
    }
    if (bound <= epsilon) certified.push_back(k);
  }
  return gap_of(certified, t.value());
}

MaxPrincipleCheck max_principle_check(const ExponentialSum& f, const Period& tau, double kappa, int m) {
  require(kappa > 0.0, "max_principle_check: kappa must be positive");
  require(m >= 1, "max_principle_check: need at least one sample");
  bohr_split(f, tau);  // validates tau against T_f
  const double bound = 2.0 * sup_bound_halfplane(bounded_part(f), kappa);
  // V_tau f - f as a sum: exactly-resonant terms cancel without rounding.
  const auto difference = subtract(translate_exact(f, tau), f);
  double observed = 0.0;
  for (const auto& s : strip_samples(Strip(kappa, kappa + 2.0), kStripSampleExtent, m)) {
    observed = std::max(observed, std::abs(evaluate(difference, s)));
  }
  return {bound, observed, observed <= bound};
}

}  // namespace bohr
