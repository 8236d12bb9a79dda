#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "bohr/exponential_sum.hpp"
#include "bohr/frequency.hpp"

namespace bohr {

/// The set T_f of vertical translation numbers over a half-plane.
class TranslationModule {
 public:
  enum class Kind { AllReals, Cyclic, Zero };

  static TranslationModule all_reals() { return TranslationModule(Kind::AllReals, std::nullopt); }
  static TranslationModule zero() { return TranslationModule(Kind::Zero, std::nullopt); }
  static TranslationModule cyclic(Period generator) { return TranslationModule(Kind::Cyclic, std::move(generator)); }

  Kind kind() const noexcept { return kind_; }
  /// Present iff kind() == Cyclic.
  const std::optional<Period>& generator() const noexcept { return generator_; }

  /// "AllReals", "Zero" or "Cyclic, t = 2π·p/q / (expr)"
  std::string to_string() const;

 private:
  TranslationModule(Kind kind, std::optional<Period> generator)
      : kind_(kind), generator_(std::move(generator)) {}

  Kind kind_;
  std::optional<Period> generator_;
};

struct SplitResult {
  ExponentialSum periodic;  // p
  ExponentialSum bounded;   // b
  Period tau;
};

/// Laurent data of a periodic sum: p(s) = sum_n a_n exp(-lambda n s).
struct LaurentSeries {
  Period period;
  Frequency lambda;  // 2π / period
  std::map<BigInt, Complex> coefficients;
};

/// True iff the unbounded frequencies are pairwise commensurable.
bool is_halfplane_ap(const ExponentialSum& f);

TranslationModule translation_module(const ExponentialSum& f);

/// f = p + b with p the terms whose frequency is a multiple of 2π/tau.
/// tau defaults to the generator of T_f and otherwise must be a positive
/// integer multiple of it.
///
/// Throws Error(AlreadyBounded) when f has no unbounded term,
/// Error(NotAlmostPeriodic) when T_f = {0} and Error(InvalidTau) for a tau
/// outside the module.
SplitResult bohr_split(const ExponentialSum& f, const std::optional<Period>& tau = std::nullopt);

/// Smallest t > 0 with V_t p = p. Throws ConstantFunction or
/// IncommensurableFrequencies.
Period fundamental_period(const ExponentialSum& p);

LaurentSeries laurent_parameters(const ExponentialSum& p);

/// Compares the unbounded parts of the periodic components of two splits.
/// Always true for valid inputs; false would indicate a library defect.
bool uniqueness_check(const ExponentialSum& f, const Period& tau1, const Period& tau2);

}  // namespace bohr
