#include "bohr/frequency.hpp"

#include <algorithm>
#include <cctype>
#include <numbers>

#include "bohr/error.hpp"

namespace bohr {

namespace {

bool is_decimal_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  }
  if (digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

HighPrecision to_precise(const Rational& q) {
  return HighPrecision(q.numerator()) / HighPrecision(q.denominator());
}

}  // namespace

BasisSymbol::BasisSymbol(std::string label, std::string decimal)
    : label_(std::move(label)), decimal_(std::move(decimal)) {
  if (label_.empty()) throw Error(ErrorKind::Validation, "empty basis label");
  if (!is_decimal_literal(decimal_)) {
    throw Error(ErrorKind::Parse, "basis '" + label_ + "': malformed decimal '" + decimal_ + "'");
  }
  precise_ = HighPrecision(decimal_);
  if (precise_.is_zero()) throw Error(ErrorKind::Validation, "basis '" + label_ + "' has value zero");
  value_ = precise_.convert_to<double>();
}

SymbolRef Basis::add(std::string label, std::string decimal) {
  if (find(label)) throw Error(ErrorKind::Validation, "duplicate basis label '" + label + "'");
  auto symbol = std::make_shared<const BasisSymbol>(std::move(label), std::move(decimal));
  symbols_.push_back(symbol);
  return symbol;
}

SymbolRef Basis::find(std::string_view label) const {
  for (const auto& s : symbols_) {
    if (s->label() == label) return s;
  }
  return nullptr;
}

SymbolRef Basis::at(std::string_view label) const {
  auto s = find(label);
  if (!s) throw Error(ErrorKind::Validation, "undeclared basis label '" + std::string(label) + "'");
  return s;
}

Frequency::Frequency(std::vector<Coordinate> coords) {
  std::stable_sort(coords.begin(), coords.end(), [](const Coordinate& a, const Coordinate& b) {
    return a.first->label() < b.first->label();
  });
  for (auto& c : coords) {
    if (!coords_.empty() && coords_.back().first->label() == c.first->label()) {
      coords_.back().second = coords_.back().second + c.second;
    } else {
      coords_.push_back(std::move(c));
    }
  }
  std::erase_if(coords_, [](const Coordinate& c) { return c.second.is_zero(); });
  refresh();
}

Frequency Frequency::of(SymbolRef symbol, Rational coefficient) {
  std::vector<Coordinate> coords;
  coords.emplace_back(std::move(symbol), std::move(coefficient));
  return Frequency(std::move(coords));
}

void Frequency::refresh() {
  HighPrecision sum = 0;
  for (const auto& [symbol, q] : coords_) sum += to_precise(q) * symbol->precise_value();
  value_ = sum.convert_to<double>();
  sign_ = sum.sign();
}

Rational Frequency::coefficient(std::string_view label) const {
  for (const auto& [symbol, q] : coords_) {
    if (symbol->label() == label) return q;
  }
  return Rational();
}

Frequency Frequency::operator-() const { return Rational(-1) * *this; }

Frequency operator+(const Frequency& a, const Frequency& b) {
  std::vector<Frequency::Coordinate> coords = a.coords_;
  coords.insert(coords.end(), b.coords_.begin(), b.coords_.end());
  return Frequency(std::move(coords));
}

Frequency operator-(const Frequency& a, const Frequency& b) { return a + (-b); }

Frequency operator*(const Rational& q, const Frequency& f) {
  if (q.is_zero()) return Frequency();
  std::vector<Frequency::Coordinate> coords;
  coords.reserve(f.coords_.size());
  for (const auto& [symbol, c] : f.coords_) coords.emplace_back(symbol, q * c);
  return Frequency(std::move(coords));
}

bool operator==(const Frequency& a, const Frequency& b) {
  if (a.coords_.size() != b.coords_.size()) return false;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i].first->label() != b.coords_[i].first->label()) return false;
    if (a.coords_[i].second != b.coords_[i].second) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Frequency& a, const Frequency& b) {
  const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.coords_[i].first->label() <=> b.coords_[i].first->label(); c != 0) return c;
    if (auto c = a.coords_[i].second <=> b.coords_[i].second; c != 0) return c;
  }
  return a.coords_.size() <=> b.coords_.size();
}

std::string Frequency::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (const auto& [symbol, q] : coords_) {
    if (out.empty()) {
      if (q.sign() < 0) out += "-";
    } else {
      out += q.sign() < 0 ? " - " : " + ";
    }
    out += q.abs().to_string() + "*" + symbol->label();
  }
  return out;
}

double freq_value(const Frequency& f) { return f.value(); }

std::optional<Rational> rational_ratio(const Frequency& f1, const Frequency& f2) {
  require(!f2.is_zero(), "rational_ratio: denominator frequency is zero");
  if (f1.is_zero()) return Rational();
  const auto& [pivot, pivot_coord] = f2.coords().front();
  Rational q = f1.coefficient(pivot->label()) / pivot_coord;
  if (q.is_zero()) return std::nullopt;
  if (!(f1 == q * f2)) return std::nullopt;
  return q;
}

Period::Period(Frequency reference, Rational multiplier)
    : reference_(std::move(reference)), multiplier_(std::move(multiplier)) {
  require(reference_.sign() > 0, "Period: reference frequency must have positive value");
  require(multiplier_.sign() > 0, "Period: multiplier must be positive");
  Rational lead = reference_.coords().front().second.abs();
  if (lead != Rational(1)) {
    reference_ = lead.reciprocal() * reference_;
    multiplier_ = multiplier_ / lead;
  }
  value_ = 2.0 * std::numbers::pi * multiplier_.to_double() / reference_.value();
}

Frequency Period::base_frequency() const { return multiplier_.reciprocal() * reference_; }

Period Period::scaled(const Rational& factor) const { return Period(reference_, multiplier_ * factor); }

std::optional<Rational> Period::ratio_to(const Period& other) const {
  // t / t' = (m / m') * value(ref') / value(ref)
  auto r = rational_ratio(other.reference_, reference_);
  if (!r) return std::nullopt;
  return multiplier_ / other.multiplier_ * *r;
}

std::string Period::to_string() const {
  return "2π·" + multiplier_.to_string() + " / (" + reference_.to_string() + ")";
}

bool operator==(const Period& a, const Period& b) {
  auto r = a.ratio_to(b);
  return r && *r == Rational(1);
}

Period common_period(std::span<const Frequency> freqs) {
  require(!freqs.empty(), "common_period: empty frequency list");
  const Frequency& pivot = freqs.front();
  BigInt den_lcm = 1;
  BigInt num_gcd = 0;
  for (const auto& nu : freqs) {
    require(nu.sign() > 0, "common_period: frequencies must have positive value");
    auto q = rational_ratio(nu, pivot);
    if (!q) {
      throw Error(ErrorKind::IncommensurableFrequencies,
                  "(" + nu.to_string() + ") and (" + pivot.to_string() + ") have no rational ratio");
    }
    den_lcm = lcm(den_lcm, q->denominator());
    num_gcd = gcd(num_gcd, q->numerator());
  }
  return Period(pivot, Rational(den_lcm, num_gcd));
}

bool is_period_multiple(const Frequency& mu, const Period& t) {
  if (mu.is_zero()) return true;
  auto r = rational_ratio(mu, t.reference());
  if (!r) return false;
  return (t.multiplier() * *r).is_integer();
}

}  // namespace bohr
