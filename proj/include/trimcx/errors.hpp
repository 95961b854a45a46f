#pragma once

#include <stdexcept>
#include <string>

namespace trimcx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text, bad file, bad parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// A caller violated a documented precondition (odd/even size, degree bounds, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotArtinianError : public Error {
public:
    using Error::Error;
};

/// A mathematical identity that must hold failed to hold. Treated as a finding.
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace trimcx
