#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace xyqc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Quadrature did not reach its tolerance within the doubling budget.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

// Requested F coefficient is not held by an FTable.
class IndexError : public Error {
  public:
    using Error::Error;
};

// Two-site state with an eigenvalue below the physicality threshold.
class PhysicalityError : public Error {
  public:
    using Error::Error;
};

// Lambda samples are not uniformly spaced.
class SpacingError : public Error {
  public:
    using Error::Error;
};

class EmptyInputError : public Error {
  public:
    using Error::Error;
};

// Finite chain too large for dense diagonalization.
class SizeError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

// Command-line or config-file problems. Carries every violated constraint.
class UsageError : public Error {
  public:
    explicit UsageError(std::vector<std::string> problems);

    const std::vector<std::string> &problems() const noexcept { return problems_; }

  private:
    std::vector<std::string> problems_;
};

} // namespace xyqc
