#include "chronocyclic/error.hpp"

#include <exception>

namespace chronocyclic {

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage: return 2;
    case ErrorKind::Domain: return 3;
    case ErrorKind::Numerical:
    case ErrorKind::Contract: return 4;
  }
  return 4;
}

void rethrow_with_stage(const std::string& stage) {
  try {
    throw;
  } catch (const Error& e) {
    throw Error(e.kind(), stage + ": " + e.what());
  } catch (const std::exception& e) {
    throw NumericalError(stage + ": " + e.what());
  }
}

}  // namespace chronocyclic
