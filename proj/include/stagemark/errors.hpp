#pragma once

#include <stdexcept>
#include <string>

namespace stagemark {

/// Domain error: invalid parameters, malformed input, failed preconditions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Command-line level error (bad arguments, malformed attack specs).
/// The CLI maps this to exit code 2, plain Error to exit code 1.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

} // namespace stagemark
