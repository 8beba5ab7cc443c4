#pragma once

#include <stdexcept>
#include <string>

namespace keypoly {

// Input or precondition violation: malformed text, non-prime p, a gamma that
// does not exceed the current value, a polynomial rejected as key, ...
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// The inputs were fine but the requested answer could not be produced within
// the configured bounds (uncertified limit values, strict semi-decisions).
class ComputationError : public std::runtime_error {
public:
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace keypoly
