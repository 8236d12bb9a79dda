#pragma once

// Exact frequency arithmetic. A frequency is a finite rational combination of
// declared basis constants; the constants are asserted (never checked) to be
// linearly independent over Q, which makes commensurability decidable.

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "bohr/rational.hpp"

namespace bohr {

using HighPrecision = boost::multiprecision::cpp_dec_float_50;

class BasisSymbol {
 public:
  BasisSymbol(std::string label, std::string decimal);

  const std::string& label() const noexcept { return label_; }
  /// The decimal string exactly as declared.
  const std::string& decimal() const noexcept { return decimal_; }
  const HighPrecision& precise_value() const noexcept { return precise_; }
  double value() const noexcept { return value_; }

 private:
  std::string label_;
  std::string decimal_;
  HighPrecision precise_;
  double value_;
};

using SymbolRef = std::shared_ptr<const BasisSymbol>;

/// An ordered set of basis symbols with unique labels.
class Basis {
 public:
  /// Throws Error(Validation) on duplicate labels or a zero value.
  SymbolRef add(std::string label, std::string decimal);
  SymbolRef find(std::string_view label) const;
  SymbolRef at(std::string_view label) const;
  const std::vector<SymbolRef>& symbols() const noexcept { return symbols_; }

 private:
  std::vector<SymbolRef> symbols_;
};

class Frequency {
 public:
  using Coordinate = std::pair<SymbolRef, Rational>;

  Frequency() = default;
  /// Merges repeated symbols, drops zero coordinates and sorts by label.
  explicit Frequency(std::vector<Coordinate> coords);
  static Frequency of(SymbolRef symbol, Rational coefficient);

  const std::vector<Coordinate>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }
  double value() const noexcept { return value_; }
  /// Sign of the numeric value, decided in high precision.
  int sign() const noexcept { return sign_; }
  Rational coefficient(std::string_view label) const;

  Frequency operator-() const;
  friend Frequency operator+(const Frequency& a, const Frequency& b);
  friend Frequency operator-(const Frequency& a, const Frequency& b);
  friend Frequency operator*(const Rational& q, const Frequency& f);

  friend bool operator==(const Frequency& a, const Frequency& b);
  /// Lexicographic on (label, coordinate) pairs; not the numeric order.
  friend std::strong_ordering operator<=>(const Frequency& a, const Frequency& b);

  /// e.g. "3/2*sqrt2 - 1/1*1"; "0" for the zero frequency.
  std::string to_string() const;

 private:
  void refresh();

  std::vector<Coordinate> coords_;
  double value_ = 0.0;
  int sign_ = 0;
};

/// t = 2π * multiplier / value(reference), with value(reference) > 0 and
/// multiplier > 0. The reference is normalized so that its first coordinate
/// (by label) is +-1.
class Period {
 public:
  Period(Frequency reference, Rational multiplier);

  const Frequency& reference() const noexcept { return reference_; }
  const Rational& multiplier() const noexcept { return multiplier_; }
  double value() const noexcept { return value_; }

  /// The frequency 2π/t as an exact vector.
  Frequency base_frequency() const;
  Period scaled(const Rational& factor) const;
  /// Exact t / other when the two references are commensurable.
  std::optional<Rational> ratio_to(const Period& other) const;

  /// "2π·p/q / (expr)"
  std::string to_string() const;

  friend bool operator==(const Period& a, const Period& b);

 private:
  Frequency reference_;
  Rational multiplier_;
  double value_;
};

double freq_value(const Frequency& f);

/// q with f1 = q * f2 as exact vectors, if it exists. f2 must be nonzero.
std::optional<Rational> rational_ratio(const Frequency& f1, const Frequency& f2);

/// Smallest t > 0 with nu_j * t in 2πZ for all j. Every input must have a
/// positive value; throws Error(IncommensurableFrequencies) when some pair has
/// no rational ratio.
Period common_period(std::span<const Frequency> freqs);

/// Exact decision of mu * t in 2πZ (false when mu is not commensurable with t).
bool is_period_multiple(const Frequency& mu, const Period& t);

}  // namespace bohr
