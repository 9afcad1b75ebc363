#pragma once

#include <stdexcept>
#include <string>

namespace wsbm {

/// Input could not be parsed or violates a documented precondition.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A variance (or quadratic form) in a statistic's denominator is zero.
struct ZeroVarianceError : std::runtime_error {
  explicit ZeroVarianceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dichotomization put every edge on one side of the threshold.
struct DegenerateDichotomyError : std::runtime_error {
  explicit DegenerateDichotomyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter left the family's natural-parameter domain.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical routine failed to converge to its tolerance.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wsbm
