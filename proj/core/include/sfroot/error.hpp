#pragma once

#include <stdexcept>
#include <string>

namespace sfroot {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated (bad argument, e does not divide p-1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured work budget or table bound was exceeded. Callers may skip or
// flag the input; the library never returns a truncated answer instead.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A floating-point evaluation that must be near-integral was not.
class ToleranceError : public Error {
public:
    using Error::Error;
};

// A certificate could not be produced, or a mathematical check failed.
class CertificationError : public Error {
public:
    using Error::Error;
};

// Internal consistency failure (would contradict group theory, etc.).
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace sfroot
