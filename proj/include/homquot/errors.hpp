#pragma once

#include <stdexcept>
#include <string>

namespace homquot {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mixing scalars/matrices over different ground fields.
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

/// Shape/ambient dimension mismatch.
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// Bad scalar string, bad JSON, index out of range, contradictory input.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Projective enumeration would exceed the configured cap.
struct EnumerationTooLarge : Error {
  explicit EnumerationTooLarge(const std::string& msg) : Error(msg) {}
};

/// Ideal-lattice closure exceeded the configured cap.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

/// Operation requested in a mode its field cannot support
/// (e.g. exhaustive scans over the rationals).
struct UnsupportedMode : Error {
  explicit UnsupportedMode(const std::string& msg) : Error(msg) {}
};

/// An operation's stated hypotheses do not hold for the input.
struct PreconditionFailed : Error {
  explicit PreconditionFailed(const std::string& msg) : Error(msg) {}
};

/// A derived structural assertion failed at runtime.  This never indicates
/// bad user input: it means a verified identity broke on a concrete
/// instance and must be triaged, not swallowed.
struct StructureViolation : Error {
  explicit StructureViolation(const std::string& msg) : Error(msg) {}
};

/// Subalgebra validation failure, with the violating data in the message.
struct NotASubalgebra : Error {
  explicit NotASubalgebra(const std::string& msg) : Error(msg) {}
};

}  // namespace homquot
