#pragma once

#include <stdexcept>
#include <string>

namespace mvd {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments: unknown labels, self-loops, bad parameters.
struct InputError : Error {
    using Error::Error;
};

// Unparseable text in one of the file formats.
struct FormatError : InputError {
    using InputError::InputError;
};

// Operation asked for outside its defined domain (e.g. kappa_plus of K_n).
struct DomainError : Error {
    using Error::Error;
};

// Instance too large for the configured cap.
struct CapacityError : Error {
    using Error::Error;
};

// Stored data fails its own consistency checks (catalog entries).
struct IntegrityError : Error {
    using Error::Error;
};

}  // namespace mvd
