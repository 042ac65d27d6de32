#pragma once

#include <stdexcept>
#include <string>

namespace ocyc {

// Invalid parameters: non-prime characteristic, malformed exponent lists, bad options.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Exponent tuple fails the gcd / congruence conditions of a code family.
class InadmissibleError : public std::invalid_argument {
public:
    explicit InadmissibleError(const std::string& what) : std::invalid_argument(what) {}
};

// Requested field or enumeration exceeds the configured size bound.
class BoundError : public std::length_error {
public:
    explicit BoundError(const std::string& what) : std::length_error(what) {}
};

}  // namespace ocyc
