#pragma once

#include <stdexcept>
#include <string>

namespace tutte {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A resource guard tripped: instance too large for the requested engine,
// recursion budget exhausted, level cap exceeded, and similar.
struct GuardError : Error {
    explicit GuardError(const std::string& what) : Error(what) {}
};

// The requested method does not apply to the given input (e.g. the cactus
// product engine on a graph with a non-cactus block).
struct MethodError : Error {
    explicit MethodError(const std::string& what) : Error(what) {}
};

// Malformed textual/JSON input.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace tutte
