#pragma once

#include <stdexcept>
#include <string>

namespace markov {

// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured budget (interval count, state count, iteration cap) was exceeded.
// The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed to produce a result (e.g. a bisection bracket
// that does not straddle the root).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace markov
