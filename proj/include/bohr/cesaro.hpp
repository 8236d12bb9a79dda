#pragma once

#include <vector>

#include "bohr/exponential_sum.hpp"
#include "bohr/frequency.hpp"

namespace bohr {

/// (1/k) * sum_{j<k} exp(i j theta). Modulus never exceeds 1.
Complex dirichlet_kernel(double theta, long long k);

enum class Summation { ClosedForm, Direct };

/// (1/k) * sum_{j<k} (V_{j tau} f)(s). ClosedForm applies the kernel termwise
/// in O(terms); Direct sums the k translates explicitly.
Complex cesaro_average(const ExponentialSum& f, double tau, long long k, HalfPlanePoint s,
                       Summation mode = Summation::ClosedForm);

/// Same average with the resonance test mu * tau in 2πZ decided exactly:
/// resonant terms get kernel value exactly 1.
Complex cesaro_average(const ExponentialSum& f, const Period& tau, long long k, HalfPlanePoint s);

/// Default vertical sampling half-extent for a given tau.
inline double default_cesaro_extent(const Period& tau) { return 10.0 * tau.value(); }

/// max over n Halton points in the strip of |average_k(f, tau) - p|, where p is
/// the periodic part of bohr_split(f, tau).
double cesaro_compare(const ExponentialSum& f, const Period& tau, long long k, const Strip& strip, int n);

struct ConvergenceProfile {
  std::vector<long long> k_values;
  std::vector<double> max_errors;
  Strip strip;
  int sample_count;
};

ConvergenceProfile convergence_profile(const ExponentialSum& f, const Period& tau,
                                       const std::vector<long long>& k_values, const Strip& strip, int n);

}  // namespace bohr
