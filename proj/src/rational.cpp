#include "bohr/rational.hpp"

#include <cctype>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bohr/error.hpp"

namespace bohr {

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return boost::multiprecision::lcm(a, b);
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::PreconditionViolation, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den.is_zero()) throw Error(ErrorKind::Validation, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash), text), den);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::PreconditionViolation, "reciprocal of zero");
  return Rational(den_, num_);
}

double Rational::to_double() const {
  using Float = boost::multiprecision::cpp_bin_float_double_extended;
  return static_cast<double>(Float(num_) / Float(den_));
}

std::string Rational::to_string() const { return num_.str() + "/" + den_.str(); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorKind::PreconditionViolation, "division by zero rational");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace bohr
