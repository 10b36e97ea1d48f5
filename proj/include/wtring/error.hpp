#pragma once

#include <stdexcept>
#include <string>

namespace wtring {

// Every library failure derives from Error; the CLI maps them to the
// validation exit code. kind() is the machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Tables of the wrong shape, indices out of range, unparsable documents.
struct MalformedInput : Error {
  explicit MalformedInput(const std::string& what)
      : Error("malformed_input", what) {}
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what)
      : Error("precondition", what) {}
};

// A constructed ring would exceed the configured order cap.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what)
      : Error("cap_exceeded", what) {}
};

// Tables that violate a ring axiom.
struct AxiomError : Error {
  explicit AxiomError(const std::string& what) : Error("axiom_failure", what) {}
};

// presentation_quotient could not certify its result at the given degree.
struct NotClosed : Error {
  explicit NotClosed(const std::string& what) : Error("not_closed", what) {}
};

// An internal certificate failed; indicates a bug, never bad input.
struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& what)
      : Error("invariant_violation", what) {}
};

}  // namespace wtring
