#include "bohr/cesaro.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bohr/error.hpp"
#include "bohr/sampling.hpp"
#include "bohr/splitting.hpp"

namespace bohr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kResonanceThreshold = 1e-9;

Complex clamp_unit(Complex z) {
  const double r = std::abs(z);
  return r > 1.0 ? z / r : z;
}

}  // namespace

Complex dirichlet_kernel(double theta, long long k) {
  require(k >= 1, "dirichlet_kernel: k must be positive");
  if (std::abs(1.0 - std::polar(1.0, theta)) > kResonanceThreshold) {
    // (1/k) (e^{ik theta} - 1) / (e^{i theta} - 1), written in the symmetric form.
    const double kd = static_cast<double>(k);
    const double ratio = std::sin(kd * theta / 2.0) / (kd * std::sin(theta / 2.0));
    return clamp_unit(std::polar(ratio, (kd - 1.0) * theta / 2.0));
  }
  // Near 2πZ: reduce, then sum directly.
  const double delta = std::remainder(theta, kTwoPi);
  if (delta == 0.0) return {1.0, 0.0};
  Complex sum(0.0, 0.0);
  for (long long j = 0; j < k; ++j) sum += std::polar(1.0, static_cast<double>(j) * delta);
  return clamp_unit(sum / static_cast<double>(k));
}

Complex cesaro_average(const ExponentialSum& f, double tau, long long k, HalfPlanePoint s, Summation mode) {
  require(k >= 1, "cesaro_average: k must be positive");
  if (mode == Summation::Direct) {
    Complex sum(0.0, 0.0);
    for (long long j = 0; j < k; ++j) sum += evaluate(translate(f, static_cast<double>(j) * tau), s);
    return sum / static_cast<double>(k);
  }
  Complex sum(0.0, 0.0);
  for (const auto& term : f.terms()) {
    const double mu = term.frequency.value();
    const Complex kernel = dirichlet_kernel(-mu * tau, k);
    sum += term.coefficient * kernel * std::polar(std::exp(-mu * s.sigma), -mu * s.t);
  }
  return sum;
}

Complex cesaro_average(const ExponentialSum& f, const Period& tau, long long k, HalfPlanePoint s) {
  require(k >= 1, "cesaro_average: k must be positive");
  Complex sum(0.0, 0.0);
  for (const auto& term : f.terms()) {
    const double mu = term.frequency.value();
    const Complex kernel =
        is_period_multiple(term.frequency, tau) ? Complex(1.0, 0.0) : dirichlet_kernel(-mu * tau.value(), k);
    sum += term.coefficient * kernel * std::polar(std::exp(-mu * s.sigma), -mu * s.t);
  }
  return sum;
}

double cesaro_compare(const ExponentialSum& f, const Period& tau, long long k, const Strip& strip, int n) {
  const auto split = bohr_split(f, tau);
  double worst = 0.0;
  for (const auto& s : strip_samples(strip, default_cesaro_extent(tau), n)) {
    const Complex diff = cesaro_average(f, tau.value(), k, s) - evaluate(split.periodic, s);
    worst = std::max(worst, std::abs(diff));
  }
  return worst;
}

ConvergenceProfile convergence_profile(const ExponentialSum& f, const Period& tau,
                                       const std::vector<long long>& k_values, const Strip& strip, int n) {
  require(!k_values.empty(), "convergence_profile: empty k list");
  require(std::is_sorted(k_values.begin(), k_values.end()), "convergence_profile: k list must be ascending");
  ConvergenceProfile profile{k_values, {}, strip, n};
  profile.max_errors.reserve(k_values.size());
  for (long long k : k_values) profile.max_errors.push_back(cesaro_compare(f, tau, k, strip, n));
  return profile;
}

}  // namespace bohr
