#include "bohr/splitting.hpp"

#include <vector>

#include "bohr/error.hpp"

namespace bohr {

std::string TranslationModule::to_string() const {
  switch (kind_) {
    case Kind::AllReals: return "AllReals";
    case Kind::Zero: return "Zero";
    case Kind::Cyclic: return "Cyclic, t = " + generator_->to_string();
  }
  return {};
}

namespace {

std::vector<Frequency> growth_rates(const ExponentialSum& f) {
  std::vector<Frequency> rates;
  for (const auto& term : f.terms()) {
    if (term.frequency.sign() < 0) rates.push_back(-term.frequency);
  }
  return rates;
}

}  // namespace

bool is_halfplane_ap(const ExponentialSum& f) {
  const auto rates = growth_rates(f);
  for (std::size_t j = 1; j < rates.size(); ++j) {
    if (!rational_ratio(rates[j], rates.front())) return false;
  }
  return true;
}

TranslationModule translation_module(const ExponentialSum& f) {
  const auto rates = growth_rates(f);
  if (rates.empty()) return TranslationModule::all_reals();
  if (!is_halfplane_ap(f)) return TranslationModule::zero();
  return TranslationModule::cyclic(common_period(rates));
}

SplitResult bohr_split(const ExponentialSum& f, const std::optional<Period>& tau) {
  const auto module = translation_module(f);
  if (module.kind() == TranslationModule::Kind::AllReals) {
    throw Error(ErrorKind::AlreadyBounded, "f has no unbounded term; the split f = 0 + f is trivial");
  }
  if (module.kind() == TranslationModule::Kind::Zero) {
    throw Error(ErrorKind::NotAlmostPeriodic, "unbounded frequencies are incommensurable, T_f = {0}");
  }
  const Period& generator = *module.generator();
  Period used = tau.value_or(generator);
  if (tau) {
    auto ratio = tau->ratio_to(generator);
    if (!ratio || !ratio->is_integer() || ratio->sign() <= 0) {
      throw Error(ErrorKind::InvalidTau,
                  "tau = " + tau->to_string() + " is not a positive multiple of " + generator.to_string());
    }
  }
  std::vector<Term> periodic;
  std::vector<Term> remainder;
  for (const auto& term : f.terms()) {
    (is_period_multiple(term.frequency, used) ? periodic : remainder).push_back(term);
  }
  return {ExponentialSum(std::move(periodic)), ExponentialSum(std::move(remainder)), std::move(used)};
}

Period fundamental_period(const ExponentialSum& p) {
  std::vector<Frequency> rates;
  for (const auto& term : p.terms()) {
    if (term.frequency.is_zero()) continue;
    rates.push_back(term.frequency.sign() < 0 ? -term.frequency : term.frequency);
  }
  if (rates.empty()) throw Error(ErrorKind::ConstantFunction, "a constant has no period");
  return common_period(rates);
}

LaurentSeries laurent_parameters(const ExponentialSum& p) {
  Period period = fundamental_period(p);
  Frequency lambda = period.base_frequency();
  std::map<BigInt, Complex> coefficients;
  for (const auto& term : p.terms()) {
    auto n = rational_ratio(term.frequency, lambda);
    // Guaranteed by the construction of the fundamental period.
    if (!n || !n->is_integer()) {
      throw Error(ErrorKind::PreconditionViolation,
                  "frequency " + term.frequency.to_string() + " is not an integer multiple of lambda");
    }
    coefficients.emplace(n->numerator(), term.coefficient);
  }
  return {std::move(period), std::move(lambda), std::move(coefficients)};
}

bool uniqueness_check(const ExponentialSum& f, const Period& tau1, const Period& tau2) {
  const auto first = bohr_split(f, tau1);
  const auto second = bohr_split(f, tau2);
  return unbounded_part(first.periodic) == unbounded_part(second.periodic);
}

}  // namespace bohr
