#ifndef GCALC_ERRORS_HPP
#define GCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gcalc {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live on different charts.
struct ChartMismatchError : Error {
  explicit ChartMismatchError(const std::string& msg) : Error(msg) {}
};

// Mathematically invalid request (negative power of a non-invertible
// generator, invertible odd generator, bad dimensions, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A stated operation precondition does not hold (non-homological
// Hamiltonian, failed master equation, non-contact form, ...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Violation of an internal invariant; never valid input's fault.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace gcalc

#endif
