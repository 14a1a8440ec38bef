#ifndef CAYLEY_ERROR_HPP
#define CAYLEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cayley {

enum class ErrorKind {
  UnsupportedFamily,
  InvalidParameter,
  MalformedElement,
  NoFormula,
  NoOracle,
  LengthMismatch,
  BudgetExceeded,
  RadiusOutOfRange,
  InsufficientRadius,
  VertexNotInAnnulus,
  DisconnectedAnnulus,
  WrongModel,
  NotInInfiniteComponent,
  UnsupportedRadius,
  WrongRadiusForm,
  OutsideAnnulus,
  CacheError,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Carries the largest radius whose ball was completely enumerated.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int completed_radius, const std::string& what)
      : Error(ErrorKind::BudgetExceeded, what), completed_radius_(completed_radius) {}
  int completed_radius() const noexcept { return completed_radius_; }

 private:
  int completed_radius_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace cayley

#endif
