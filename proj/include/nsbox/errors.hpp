#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nsbox {

// Base of all domain errors. `name()` is the stable identifier the CLI
// surfaces next to exit status 3.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class WeightSumError : public Error {
public:
  explicit WeightSumError(const std::string& m) : Error("WeightSumError", m) {}
};

class NegativeWeightError : public Error {
public:
  explicit NegativeWeightError(const std::string& m) : Error("NegativeWeightError", m) {}
};

class InfeasibleError : public Error {
public:
  explicit InfeasibleError(const std::string& m) : Error("InfeasibleError", m) {}
};

class DomainError : public Error {
public:
  explicit DomainError(const std::string& m) : Error("DomainError", m) {}
};

class ConvergenceError : public Error {
public:
  explicit ConvergenceError(const std::string& m) : Error("ConvergenceError", m) {}
};

class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& m) : Error("BudgetError", m) {}
};

}  // namespace nsbox
