#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bohr/cesaro.hpp"
#include "bohr/error.hpp"
#include "bohr/sampling.hpp"
#include "bohr/splitting.hpp"
#include "test_support.hpp"

using namespace bohr;
using namespace bohr::testing;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::PreconditionViolation;
}

// Independent check of a split: numerical Cesàro averages at 20 strip points.
double cesaro_gap(const ExponentialSum& f, const ExponentialSum& p, double tau) {
  double worst = 0.0;
  for (const auto& s : strip_samples(Strip(0.5, 1.0), 10.0 * tau, 20)) {
    worst = std::max(worst, std::abs(cesaro_average(f, tau, 10000, s) - evaluate(p, s)));
  }
  return worst;
}

}  // namespace

TEST_CASE("is_halfplane_ap") {
  CHECK(is_halfplane_ap(sum({{1.0, one(1)}, {1.0, freq("sqrt2", 1)}})));
  CHECK(is_halfplane_ap(sum({{1.0, one(-1)}, {1.0, one(-2)}})));
  CHECK_FALSE(is_halfplane_ap(sum({{1.0, one(-1)}, {1.0, freq("sqrt2", -1)}})));
}

TEST_CASE("translation_module") {
  const auto cyclic = translation_module(sum({{1.0, freq("sqrt2", -1)}}));
  REQUIRE(cyclic.kind() == TranslationModule::Kind::Cyclic);
  CHECK(*cyclic.generator() == Period(freq("sqrt2", 1), Rational(1)));
  CHECK(cyclic.generator()->value() == doctest::Approx(kTwoPi / std::numbers::sqrt2));

  CHECK(translation_module(sum({{1.0, one(-1)}, {1.0, freq("sqrt2", -1)}})).kind() == TranslationModule::Kind::Zero);
  const auto bounded = translation_module(sum({{1.0, one(1)}}));
  CHECK(bounded.kind() == TranslationModule::Kind::AllReals);
  CHECK_FALSE(bounded.generator().has_value());
  CHECK(bounded.to_string() == "AllReals");
}

TEST_CASE("bohr_split examples") {
  SUBCASE("already periodic") {
    const auto f = sum({{1.0, one(-1)}, {1.0, one(1)}});
    const auto split = bohr_split(f);
    CHECK(split.periodic == f);
    CHECK(split.bounded.empty());
    CHECK(split.tau == Period(one(1), Rational(1)));
  }
  SUBCASE("one incommensurable bounded term") {
    const auto f = sum({{1.0, one(-1)}, {1.0, freq("sqrt2", 1)}});
    const auto split = bohr_split(f, Period(one(1), Rational(1)));
    CHECK(split.periodic == sum({{1.0, one(-1)}}));
    CHECK(split.bounded == sum({{1.0, freq("sqrt2", 1)}}));
    CHECK(cesaro_gap(f, split.periodic, kTwoPi) <= 1e-3);
  }
  SUBCASE("four terms") {
    const auto f = sum({{2.0, one(-1)}, {1.0, one(-2)}, {Complex(1, 1), one(1)}, {1.0, freq("sqrt2", 1)}});
    const auto split = bohr_split(f, Period(one(1), Rational(1)));
    CHECK(split.periodic == sum({{2.0, one(-1)}, {1.0, one(-2)}, {Complex(1, 1), one(1)}}));
    CHECK(split.bounded == sum({{1.0, freq("sqrt2", 1)}}));
    CHECK(cesaro_gap(f, split.periodic, kTwoPi) <= 1e-3);
  }
}

TEST_CASE("bohr_split errors") {
  CHECK(kind_of([] { bohr_split(sum({{1.0, one(-1)}, {1.0, freq("sqrt2", -1)}})); }) == ErrorKind::NotAlmostPeriodic);
  CHECK(kind_of([] { bohr_split(sum({{1.0, one(1)}})); }) == ErrorKind::AlreadyBounded);
  CHECK(kind_of([] { bohr_split(sum({{2.0, Frequency()}})); }) == ErrorKind::AlreadyBounded);
  const auto f = sum({{1.0, one(-1)}, {1.0, freq("sqrt2", 1)}});
  CHECK(kind_of([&] { bohr_split(f, Period(one(1), Rational(BigInt(1), BigInt(2)))); }) == ErrorKind::InvalidTau);
  CHECK(kind_of([&] { bohr_split(f, Period(freq("sqrt2", 1), Rational(1))); }) == ErrorKind::InvalidTau);
  CHECK(kind_of([&] { bohr_split(f, Period(one(1), Rational(BigInt(3), BigInt(2)))); }) == ErrorKind::InvalidTau);
  CHECK_NOTHROW(bohr_split(f, Period(one(1), Rational(7))));
}

TEST_CASE("fundamental_period") {
  CHECK(fundamental_period(sum({{1.0, one(-1)}})).value() == doctest::Approx(kTwoPi));
  CHECK(fundamental_period(sum({{1.0, one(-1)}, {1.0, one(-3, 2)}})).value() == doctest::Approx(2.0 * kTwoPi));
  CHECK(fundamental_period(sum({{1.0, one(-2)}})).value() == doctest::Approx(std::numbers::pi));
  // Mixed signs and a constant do not change the period.
  CHECK(fundamental_period(sum({{1.0, one(-2)}, {1.0, Frequency()}, {1.0, one(3)}})) == Period(one(1), Rational(1)));
  CHECK(kind_of([] { fundamental_period(sum({{1.0, Frequency()}})); }) == ErrorKind::ConstantFunction);
  CHECK(kind_of([] { fundamental_period(sum({{1.0, one(1)}, {1.0, freq("sqrt2", 1)}})); }) ==
        ErrorKind::IncommensurableFrequencies);
}

TEST_CASE("laurent_parameters") {
  SUBCASE("single term") {
    const auto series = laurent_parameters(sum({{1.0, one(-1)}}));
    CHECK(series.lambda == one(1));
    REQUIRE(series.coefficients.size() == 1);
    CHECK(series.coefficients.at(BigInt(-1)) == Complex(1.0, 0.0));
  }
  SUBCASE("index readback") {
    const auto series = laurent_parameters(sum({{1.0, one(-1)}, {3.0, one(2)}}));
    CHECK(series.lambda == one(1));
    CHECK(series.coefficients.at(BigInt(-1)) == Complex(1.0, 0.0));
    CHECK(series.coefficients.at(BigInt(2)) == Complex(3.0, 0.0));
  }
  SUBCASE("half-integer exponents") {
    const auto series = laurent_parameters(sum({{1.0, one(-1)}, {1.0, one(-3, 2)}}));
    CHECK(series.period.value() == doctest::Approx(2.0 * kTwoPi));
    CHECK(series.lambda == one(1, 2));
    CHECK(series.coefficients.at(BigInt(-2)) == Complex(1.0, 0.0));
    CHECK(series.coefficients.at(BigInt(-3)) == Complex(1.0, 0.0));
  }
  CHECK_THROWS_AS(laurent_parameters(sum({{1.0, Frequency()}})), Error);
}

TEST_CASE("uniqueness_check") {
  const Period t(one(1), Rational(1));
  CHECK(uniqueness_check(sum({{1.0, one(-1)}, {1.0, freq("sqrt2", 1)}}), t, t.scaled(Rational(3))));
  CHECK(uniqueness_check(sum({{1.0, one(-1)}, {1.0, one(-2)}, {1.0, freq("sqrt2", 1)}}), t, t.scaled(Rational(2))));
  CHECK(uniqueness_check(sum({{1.0, one(-1)}}), t, t));
}

TEST_CASE("split invariants over random almost periodic sums") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto f = random_ap_sum(rng);
    const auto module = translation_module(f);
    REQUIRE(module.kind() == TranslationModule::Kind::Cyclic);
    const Period& t = *module.generator();

    // The generator captures every growth rate and is minimal.
    const auto growth = unbounded_part(f);
    for (const auto& term : growth.terms()) CHECK(is_period_multiple(-term.frequency, t));
    for (int m = 2; m <= 5; ++m) {
      bool all = true;
      for (const auto& term : growth.terms()) all = all && is_period_multiple(-term.frequency, t.scaled(Rational(BigInt(1), BigInt(m))));
      CHECK_FALSE(all);
    }

    const auto base = bohr_split(f);
    for (int k : {1, 2, 3, 6}) {
      const auto split = bohr_split(f, t.scaled(Rational(k)));
      // Partition identity.
      CHECK(add(split.periodic, split.bounded) == f);
      CHECK(split.periodic.size() + split.bounded.size() == f.size());
      // Unbounded capture.
      CHECK(unbounded_part(split.periodic) == unbounded_part(f));
      CHECK(unbounded_part(split.bounded).empty());
      // Exact periodicity, no rotation applied.
      CHECK(translate_exact(split.periodic, split.tau) == split.periodic);
      for (const auto& term : split.bounded.terms()) CHECK_FALSE(is_period_multiple(term.frequency, split.tau));
      // Monotone in the multiple.
      for (const auto& term : base.periodic.terms()) {
        bool present = false;
        for (const auto& other : split.periodic.terms()) present = present || other.frequency == term.frequency;
        CHECK(present);
      }
      // Bounded remainder.
      CHECK(std::isfinite(sup_bound_halfplane(split.bounded, 0.1)));
    }
  }
}
