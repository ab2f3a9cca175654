#pragma once

#include <stdexcept>
#include <string>

namespace lpb {

// Internal self-check failed: a non-integral degree, two evaluation paths
// disagreeing, a held-out interpolation node off the curve, or a cache file
// holding two different values for one key.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// A computed result does not match an external reference.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lpb
