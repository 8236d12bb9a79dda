#pragma once

#include <functional>
#include <vector>

#include "bohr/exponential_sum.hpp"

namespace bohr {

using Evaluator = std::function<Complex(HalfPlanePoint)>;

/// Composite-trapezoid approximation of
///   (1/2T) \int_{-T}^{T} f(sigma + i t) e^{lambda sigma} e^{i lambda t} dt,
/// the vertical mean that recovers the coefficient of exp(-lambda s).
/// Throws Error(NonFinite) naming the offending t if the evaluator is not finite.
Complex mean_coefficient(const Evaluator& evaluator, double lambda, double sigma, double half_length, long long panels);

struct SpectrumEntry {
  double frequency;
  Complex coefficient;
  /// sum over terms of f not matching this candidate of
  /// |a_j| e^{(lambda - mu_j) sigma} / (T |lambda - mu_j|).
  double leakage_bound;
};

struct SpectrumEstimate {
  double sigma;
  double half_length;  // T
  long long panels;
  std::vector<SpectrumEntry> entries;
};

SpectrumEstimate recover_spectrum(const ExponentialSum& f, const std::vector<double>& candidates, double sigma,
                                  double half_length, long long panels);

/// Leakage from the terms of f that are farther than a relative 1e-9 from lambda.
double leakage_bound(const ExponentialSum& f, double lambda, double sigma, double half_length);

}  // namespace bohr
