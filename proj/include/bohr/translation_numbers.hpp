#pragma once

#include <optional>
#include <vector>

#include "bohr/exponential_sum.hpp"
#include "bohr/frequency.hpp"

namespace bohr {

struct CertificationResult {
  enum class Status { Certified, Refuted, Unknown };

  Status status = Status::Unknown;
  std::optional<HalfPlanePoint> witness;   // Refuted only
  std::optional<double> certified_bound;   // Certified only
};

const char* to_string(CertificationResult::Status status);

/// Default half-extent in t for strip sampling.
inline constexpr double kStripSampleExtent = 50.0;

/// B(tau) = sum_j |a_j| max(e^{-mu_j alpha}, e^{-mu_j beta}) |e^{-i mu_j tau} - 1|,
/// an upper bound for sup over the strip of |V_tau f - f|.
double translation_bound(const ExponentialSum& f, double tau, const Strip& strip);

/// As above with exactly-resonant terms contributing exactly 0.
double translation_bound(const ExponentialSum& f, const Period& tau, const Strip& strip);

/// Certified iff B(tau) <= epsilon. Otherwise Unknown, or Refuted when
/// refutation_samples is given and sampling finds a violation.
CertificationResult certify_translation_strip(const ExponentialSum& f, double tau, double epsilon,
                                              const Strip& strip,
                                              std::optional<int> refutation_samples = std::nullopt);
CertificationResult certify_translation_strip(const ExponentialSum& f, const Period& tau, double epsilon,
                                              const Strip& strip);

/// Refuted iff some of m Halton points has |f(s + i tau) - f(s)| > epsilon (1 + 1e-9).
CertificationResult refute_translation_strip(const ExponentialSum& f, double tau, double epsilon,
                                             const Strip& strip, int m);

struct TauGrid {
  double start;
  double step;
  long long count;
};

struct StripScanReport {
  double epsilon;
  Strip strip;
  double tau_max;
  TauGrid grid;
  std::vector<double> certified_taus;
  double max_gap;
  // B(tau) for every grid point, in grid order.
  std::vector<double> bounds;
};

/// Certifies the grid {0, +-step, ..., +-tauMax}. max_gap includes the
/// distances from -tauMax and +tauMax to the outermost certified values.
StripScanReport scan_translations(const ExponentialSum& f, double epsilon, const Strip& strip, double tau_max,
                                  double step);

/// Largest distance between consecutive certified multiples t*k, |k| <= kMax.
/// +inf when only k = 0 is certified.
double progression_intersection_gap(const ExponentialSum& f, double t, double epsilon, const Strip& strip,
                                    long long k_max);
double progression_intersection_gap(const ExponentialSum& f, const Period& t, double epsilon, const Strip& strip,
                                    long long k_max);

struct MaxPrincipleCheck {
  double bound;
  double max_observed;
  bool pass;
};

/// bound = 2 * sup_bound_halfplane(bounded_part(f), kappa); max_observed is the
/// sampled sup of |V_tau f - f| over m Halton points in the strip (kappa, kappa + 2).
/// tau must be a positive multiple of the Cyclic generator of T_f.
MaxPrincipleCheck max_principle_check(const ExponentialSum& f, const Period& tau, double kappa, int m);

}  // namespace bohr
