#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bohr {

enum class ErrorKind {
  PreconditionViolation,
  IncommensurableFrequencies,
  ConstantFunction,
  NotAlmostPeriodic,
  AlreadyBounded,
  InvalidTau,
  NonFinite,
  Parse,
  Validation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that callers (and
/// the CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::PreconditionViolation, what);
}

}  // namespace bohr
