#pragma once

#include <stdexcept>
#include <string>

namespace chronocyclic {

enum class ErrorKind {
  Usage,      // malformed configuration or command line
  Domain,     // physics input outside the model's validity (window, degenerate form)
  Numerical,  // a computation produced an unusable result
  Contract,   // caller broke an API precondition
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(ErrorKind::Contract, what) {}
};

// Process exit status for an error kind: 2 usage, 3 physics domain, 4 numerical.
// Contract violations are reported as numerical failures.
int exit_code(ErrorKind kind) noexcept;

// Rethrows the error currently being handled with "stage: " prepended,
// keeping its kind. Non-library exceptions become numerical errors.
[[noreturn]] void rethrow_with_stage(const std::string& stage);

}  // namespace chronocyclic
