#ifndef RATSEARCH_ERRORS_HPP
#define RATSEARCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratsearch {

// Base for all domain errors thrown by the library.  The CLI maps these to
// exit codes; tests match on the concrete type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input (equation text, point-list files, bad flags).
struct InputError : Error {
    using Error::Error;
};

struct SyntaxError : InputError {
    std::size_t offset;  // byte offset into the input text
    SyntaxError(const std::string& msg, std::size_t off)
        : InputError(msg + " at offset " + std::to_string(off)), offset(off) {}
};

struct WrongVariablesError : InputError {
    using InputError::InputError;
};

struct ZeroPolynomialError : InputError {
    using InputError::InputError;
};

struct OracleShapeMismatch : InputError {
    using InputError::InputError;
};

// The curve contains a vertical line x = p as a component, so a fiber there
// is not zero-dimensional.
struct VerticalComponentError : InputError {
    using InputError::InputError;
};

// Leading form vanishes on the x = 0 direction; the puncture embedding would
// carry a whole boundary line.  Shear first.
struct DegenerateBoundaryError : InputError {
    using InputError::InputError;
};

// Resource caps.
struct CandidateCapExceeded : Error {
    using Error::Error;
};

// Lift anomalies (surfaced in strict mode; they indicate a screening gap).
struct NotOnImageError : Error {
    using Error::Error;
};
struct AmbiguousLiftError : Error {
    using Error::Error;
};
struct MissingLiftError : Error {
    using Error::Error;
};

// Projection postcondition failures (upstream bug signals).
struct EliminationNotPrincipal : Error {
    using Error::Error;
};
struct DegenerateProjection : Error {
    using Error::Error;
};

// A checked internal invariant failed.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace ratsearch

#endif
