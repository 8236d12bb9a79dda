#pragma once

#include <complex>
#include <vector>

#include "bohr/frequency.hpp"

namespace bohr {

using Complex = std::complex<double>;

/// One summand a * exp(-mu * s). Unbounded as Re s -> +inf iff value(mu) < 0.
struct Term {
  Complex coefficient;
  Frequency frequency;
};

/// s = sigma + i t
struct HalfPlanePoint {
  double sigma = 0.0;
  double t = 0.0;

  Complex as_complex() const { return {sigma, t}; }
};

/// Vertical strip alpha < Re s < beta.
class Strip {
 public:
  Strip(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// A finite exponential sum kept in canonical form: distinct frequencies,
/// nonzero coefficients, sorted by numeric frequency value with a
/// lexicographic tie-break on the exact coordinates.
class ExponentialSum {
 public:
  ExponentialSum() = default;
  explicit ExponentialSum(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient-exact term identity.
  friend bool operator==(const ExponentialSum& a, const ExponentialSum& b);

 private:
  std::vector<Term> terms_;
};

ExponentialSum add(const ExponentialSum& f, const ExponentialSum& g);
ExponentialSum subtract(const ExponentialSum& f, const ExponentialSum& g);
ExponentialSum scale(const ExponentialSum& f, Complex c);

/// May be non-finite for very negative mu * sigma; callers check.
Complex evaluate(const ExponentialSum& f, HalfPlanePoint s);

/// V_tau f: coefficients rotated by exp(-i mu tau).
ExponentialSum translate(const ExponentialSum& f, double tau);

/// V_t f where terms with mu * t in 2πZ keep their coefficient bit-for-bit.
ExponentialSum translate_exact(const ExponentialSum& f, const Period& t);

ExponentialSum unbounded_part(const ExponentialSum& f);
ExponentialSum bounded_part(const ExponentialSum& f);

/// Certified upper bound of |f| on the closed strip.
double sup_bound_strip(const ExponentialSum& f, const Strip& strip);

/// Upper bound of sup |f| over Re s >= kappa; +inf when an unbounded term is present.
double sup_bound_halfplane(const ExponentialSum& f, double kappa);

/// Sampled lower estimate of sup_t |f(sigma + i t)| over n uniform t in [-tMax, tMax].
double msup_sample(const ExponentialSum& f, double sigma, double t_max, int n);

}  // namespace bohr
