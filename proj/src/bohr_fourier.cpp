#include "bohr/bohr_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bohr/error.hpp"

namespace bohr {

Complex mean_coefficient(const Evaluator& evaluator, double lambda, double sigma, double half_length,
                         long long panels) {
  require(half_length > 0.0, "mean_coefficient: T must be positive");
  require(panels >= 2, "mean_coefficient: need at least two panels");
  const double h = 2.0 * half_length / static_cast<double>(panels);
  const double growth = std::exp(lambda * sigma);
  Complex sum(0.0, 0.0);
  for (long long i = 0; i <= panels; ++i) {
    const double t = -half_length + h * static_cast<double>(i);
    const Complex value = evaluator({sigma, t});
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "evaluator is not finite at sigma = " << sigma << ", t = " << t;
      throw Error(ErrorKind::NonFinite, msg.str());
    }
    const double weight = (i == 0 || i == panels) ? 0.5 : 1.0;
    sum += weight * value * std::polar(1.0, lambda * t);
  }
  return growth * sum * h / (2.0 * half_length);
}

double leakage_bound(const ExponentialSum& f, double lambda, double sigma, double half_length) {
  double bound = 0.0;
  for (const auto& term : f.terms()) {
    const double mu = term.frequency.value();
    const double separation = std::abs(lambda - mu);
    if (separation <= 1e-9 * std::max(1.0, std::abs(mu))) continue;
    bound += std::abs(term.coefficient) * std::exp((lambda - mu) * sigma) / (half_length * separation);
  }
  return bound;
}

SpectrumEstimate recover_spectrum(const ExponentialSum& f, const std::vector<double>& candidates, double sigma,
                                  double half_length, long long panels) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      require(candidates[i] != candidates[j], "recover_spectrum: candidates must be pairwise distinct");
    }
  }
  SpectrumEstimate estimate{sigma, half_length, panels, {}};
  const Evaluator evaluator = [&f](HalfPlanePoint s) { return evaluate(f, s); };
  for (double lambda : candidates) {
    estimate.entries.push_back({lambda, mean_coefficient(evaluator, lambda, sigma, half_length, panels),
                                leakage_bound(f, lambda, sigma, half_length)});
  }
  return estimate;
}

}  // namespace bohr
