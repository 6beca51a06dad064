#pragma once

#include <stdexcept>
#include <string>

namespace h3m {

// Root of every error the library throws on bad input.  The CLI maps the
// concrete subclasses onto its exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape mismatches, asymmetric input, unparsable text.
class MalformedInput : public Error {
public:
    using Error::Error;
};

// Well-formed input that violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Signatures outside the classification's scope (Riemannian, n = 3).
class UnsupportedSignature : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A floating-point isometry witness that failed its residual checks.
class WitnessFailure : public Error {
public:
    using Error::Error;
};

} // namespace h3m
