#pragma once

#include <stdexcept>
#include <string>

namespace numsg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A modular inverse was requested for a non-coprime pair.
class NotInvertible : public Error {
public:
    using Error::Error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

/// Generator list is empty, has a zero, or has overall gcd > 1.
class InvalidGenerators : public Error {
public:
    using Error::Error;
};

/// A formula's precondition does not hold for the given input.
class HypothesisNotMet : public Error {
public:
    using Error::Error;
};

/// Index arguments violate the i != j / provenance contract.
class IndexContract : public Error {
public:
    using Error::Error;
};

/// An exact identity that must hold failed. Always an arithmetic bug.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

/// Two routes to the same value disagreed. Always a bug.
class AgreementFailure : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace numsg
