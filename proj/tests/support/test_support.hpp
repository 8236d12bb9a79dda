#pragma once

// Shared fixtures and random generators for the unit and acceptance suites.

#include <complex>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "bohr/exponential_sum.hpp"
#include "bohr/frequency.hpp"

namespace bohr::testing {

inline const char* kSqrt2Decimal = "1.4142135623730950488016887242096980785696718753769";
inline const char* kSqrt3Decimal = "1.7320508075688772935274463415058723669428052538104";

inline const Basis& standard_basis() {
  static const Basis basis = [] {
    Basis b;
    b.add("1", "1");
    b.add("sqrt2", kSqrt2Decimal);
    b.add("sqrt3", kSqrt3Decimal);
    return b;
  }();
  return basis;
}

inline Frequency freq(const std::string& label, std::int64_t p, std::int64_t q = 1) {
  return Frequency::of(standard_basis().at(label), Rational(BigInt(p), BigInt(q)));
}

/// Integer multiples of the rational unit "1".
inline Frequency one(std::int64_t p, std::int64_t q = 1) { return freq("1", p, q); }

inline ExponentialSum sum(std::initializer_list<Term> terms) { return ExponentialSum(std::vector<Term>(terms)); }

inline Complex random_coefficient(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Complex a(u(rng), u(rng));
  return std::abs(a) < 0.05 ? Complex(1.0, 0.0) : a;
}

/// Unbounded, analytic, almost periodic sum: 1-3 unbounded terms with
/// commensurable exponents plus up to 3 bounded terms, at most 6 in total.
inline ExponentialSum random_ap_sum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(1, 6);
  std::uniform_int_distribution<int> denom(1, 4);
  std::uniform_int_distribution<int> count_unbounded(1, 3);
  std::uniform_int_distribution<int> count_bounded(0, 3);
  std::uniform_int_distribution<int> pick(0, 3);
  const char* growth_labels[] = {"1", "sqrt2"};
  const std::string base = growth_labels[pick(rng) % 2];
  std::vector<Term> terms;
  const int unbounded = count_unbounded(rng);
  for (int i = 0; i < unbounded; ++i) terms.push_back({random_coefficient(rng), freq(base, -small(rng), denom(rng))});
  const int bounded = count_bounded(rng);
  for (int i = 0; i < bounded; ++i) {
    Frequency mu;
    switch (pick(rng)) {
      case 0: mu = freq("1", small(rng) - 1, denom(rng)); break;
      case 1: mu = freq("sqrt2", small(rng), denom(rng)); break;
      case 2: mu = freq("sqrt3", small(rng), denom(rng)); break;
      default: mu = freq("1", small(rng), denom(rng)) + freq("sqrt2", small(rng), denom(rng)); break;
    }
    terms.push_back({random_coefficient(rng), mu});
  }
  return ExponentialSum(std::move(terms));
}

/// Arbitrary sum with frequencies of either sign (not necessarily almost periodic).
inline ExponentialSum random_sum(std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> numer(-6, 6);
  std::uniform_int_distribution<int> denom(1, 4);
  std::uniform_int_distribution<int> pick(0, 2);
  const char* labels[] = {"1", "sqrt2", "sqrt3"};
  std::vector<Term> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms.push_back({random_coefficient(rng), freq(labels[pick(rng)], numer(rng), denom(rng))});
  return ExponentialSum(std::move(terms));
}

}  // namespace bohr::testing
