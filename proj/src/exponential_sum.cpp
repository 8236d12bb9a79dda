#include "bohr/exponential_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bohr/error.hpp"

namespace bohr {

Strip::Strip(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  require(alpha < beta, "Strip: alpha must be less than beta");
}

ExponentialSum::ExponentialSum(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.frequency < b.frequency; });
  for (auto& term : terms) {
    if (!terms_.empty() && terms_.back().frequency == term.frequency) {
      terms_.back().coefficient += term.coefficient;
    } else {
      terms_.push_back(std::move(term));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coefficient == Complex(0.0, 0.0); });
  std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    if (a.frequency.value() != b.frequency.value()) return a.frequency.value() < b.frequency.value();
    return a.frequency < b.frequency;
  });
}

bool operator==(const ExponentialSum& a, const ExponentialSum& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (!(a.terms_[i].frequency == b.terms_[i].frequency)) return false;
  }
  return true;
}

ExponentialSum add(const ExponentialSum& f, const ExponentialSum& g) {
  std::vector<Term> terms = f.terms();
  terms.insert(terms.end(), g.terms().begin(), g.terms().end());
  return ExponentialSum(std::move(terms));
}

ExponentialSum subtract(const ExponentialSum& f, const ExponentialSum& g) {
  return add(f, scale(g, Complex(-1.0, 0.0)));
}

ExponentialSum scale(const ExponentialSum& f, Complex c) {
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.coefficient *= c;
  return ExponentialSum(std::move(terms));
}

Complex evaluate(const ExponentialSum& f, HalfPlanePoint s) {
  Complex sum(0.0, 0.0);
  for (const auto& term : f.terms()) {
    const double mu = term.frequency.value();
    if (mu == 0.0) {
      sum += term.coefficient;
      continue;
    }
    sum += term.coefficient * std::polar(std::exp(-mu * s.sigma), -mu * s.t);
  }
  return sum;
}

ExponentialSum translate(const ExponentialSum& f, double tau) {
  std::vector<Term> terms = f.terms();
  for (auto& term : terms) {
    const double mu = term.frequency.value();
    if (mu != 0.0) term.coefficient *= std::polar(1.0, -mu * tau);
  }
  return ExponentialSum(std::move(terms));
}

ExponentialSum translate_exact(const ExponentialSum& f, const Period& t) {
  std::vector<Term> terms = f.terms();
  for (auto& term : terms) {
    if (is_period_multiple(term.frequency, t)) continue;
    term.coefficient *= std::polar(1.0, -term.frequency.value() * t.value());
  }
  return ExponentialSum(std::move(terms));
}

ExponentialSum unbounded_part(const ExponentialSum& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.frequency.sign() < 0) terms.push_back(t);
  }
  return ExponentialSum(std::move(terms));
}

ExponentialSum bounded_part(const ExponentialSum& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.frequency.sign() >= 0) terms.push_back(t);
  }
  return ExponentialSum(std::move(terms));
}

double sup_bound_strip(const ExponentialSum& f, const Strip& strip) {
  double bound = 0.0;
  for (const auto& term : f.terms()) {
    const double mu = term.frequency.value();
    bound += std::abs(term.coefficient) * std::max(std::exp(-mu * strip.alpha()), std::exp(-mu * strip.beta()));
  }
  return bound;
}

double sup_bound_halfplane(const ExponentialSum& f, double kappa) {
  double bound = 0.0;
  for (const auto& term : f.terms()) {
    if (term.frequency.sign() < 0) return std::numeric_limits<double>::infinity();
    bound += std::abs(term.coefficient) * std::exp(-term.frequency.value() * kappa);
  }
  return bound;
}

double msup_sample(const ExponentialSum& f, double sigma, double t_max, int n) {
  require(n >= 2, "msup_sample: need at least two samples");
  require(t_max > 0.0, "msup_sample: tMax must be positive");
  double best = 0.0;
  const double step = 2.0 * t_max / (n - 1);
  for (int k = 0; k < n; ++k) {
    best = std::max(best, std::abs(evaluate(f, {sigma, -t_max + step * k})));
  }
  return best;
}

}  // namespace bohr
