#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bohr {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  /// Accepts "p", "p/q" (optionally signed). Throws Error(Parse) otherwise.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Rational abs() const { return Rational(num_ < 0 ? BigInt(-num_) : num_, den_, Reduced{}); }
  Rational reciprocal() const;
  double to_double() const;

  /// Always "p/q", including integers ("3/1").
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(BigInt(-num_), den_, Reduced{}); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace bohr
