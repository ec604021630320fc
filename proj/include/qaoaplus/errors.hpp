#pragma once

#include <stdexcept>
#include <string>

namespace qaoaplus {

/// Problem size outside the supported range (qubit count, enumeration cap).
class SizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Vector or parameter length does not match what the operation expects.
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Qubit or basis index out of range, or target listed among its own controls.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Numeric precondition violated (weight ordering, degenerate sizes).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Instance text or instance data that breaks a model invariant.
class InstanceError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Syntax error in a text file; carries the 1-based line number.
class ParseError : public std::invalid_argument {
  public:
    ParseError(std::size_t line, const std::string &what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Every optimizer restart failed, or the instance generator gave up.
class OptimizationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class GenerationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Precondition on an instance not met (e.g. MEC not unique).
class PreconditionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace qaoaplus
