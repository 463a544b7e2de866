#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace msnoise {

/// One violated parameter invariant.
struct Violation {
  std::string field;
  std::string message;

  bool operator==(const Violation &) const = default;
};

/// Thrown when parameters or input files fail validation. Carries every
/// violation found, not just the first.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<Violation> violations);
  ValidationError(std::string field, std::string message);

  const std::vector<Violation> &violations() const noexcept { return violations_; }

private:
  std::vector<Violation> violations_;
};

/// Throws ValidationError if `violations` is non-empty.
void throw_if_invalid(std::vector<Violation> violations);

} // namespace msnoise
