#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oco {

// Argument outside the mathematical domain of an operation (r < 1, NaN input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller broke a documented precondition (missing schedule view, d out of range, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InfeasiblePointError : public ContractError {
 public:
  InfeasiblePointError(std::size_t round, double norm)
      : ContractError("learner played a point outside the ball at round " + std::to_string(round) +
                      " (norm " + std::to_string(norm) + ")"),
        round_(round), norm_(norm) {}
  std::size_t round() const noexcept { return round_; }
  double norm() const noexcept { return norm_; }

 private:
  std::size_t round_;
  double norm_;
};

class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double bracket_width)
      : std::runtime_error(what + " (bracket width " + std::to_string(bracket_width) + ")"),
        bracket_width_(bracket_width) {}
  double bracket_width() const noexcept { return bracket_width_; }

 private:
  double bracket_width_;
};

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oco
