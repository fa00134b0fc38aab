#pragma once

#include <stdexcept>
#include <string>

namespace strataforge {

// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: malformed fixtures, inhomogeneous relations, shape mismatches.
struct MalformedError : Error {
    explicit MalformedError(const std::string& msg) : Error(msg) {}
};

// The requested operation is not defined for the given field or data
// (e.g. submodule enumeration over the rationals).
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// An enumeration exceeded its work budget.
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// A certificate or internal consistency check failed.  These indicate a bug,
// not bad input, and always carry the offending object serialized.
struct VerifyError : Error {
    explicit VerifyError(const std::string& msg) : Error(msg) {}
};

}  // namespace strataforge
