#pragma once

#include <stdexcept>
#include <string>

namespace skewbrace {

// Input data failed validation: bad tables, broken axioms, malformed
// documents. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
public:
  enum class Kind {
    NotAssociative,
    NoIdentity,
    NoInverse,
    TooLarge,
    GroupInvalid,
    MismatchedIdentity,
    AxiomFails,
    NotASubgroup,
    NotNormal,
    NotAnIdeal,
    ArityMismatch,
    PreconditionViolated,
    NotBilinear,
    KernelNotAbelian,
    TrivialCenter,
    CocycleIdentityFails,
    CompatibilityFails,
    ParseError,
  };

  ValidationError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

// A computation contradicted a fact that holds for every valid brace.
// Seeing one of these means the library itself is broken; the CLI maps
// them to exit code 3.
class InternalInconsistency : public std::logic_error {
public:
  explicit InternalInconsistency(const std::string& message)
      : std::logic_error(message) {}
};

}  // namespace skewbrace
