#pragma once

#include <stdexcept>
#include <string>

namespace fraclog {

/// Thrown when an evaluation cannot certify the requested tolerance.
/// Callers that can live with a weaker bound should catch this and retry
/// with a larger tolerance; silently returning an uncertified value is
/// never an option.
class ToleranceError : public std::runtime_error {
  public:
    ToleranceError(const std::string& what, double requested, double achieved)
        : std::runtime_error(what), requested_(requested), achieved_(achieved) {}

    double requested() const noexcept { return requested_; }
    double achieved() const noexcept { return achieved_; }

  private:
    double requested_;
    double achieved_;
};

/// Thrown when a series exceeds its hard term cap without meeting the
/// stopping rule.
class NonConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace fraclog
