#pragma once

#include <stdexcept>
#include <string>

namespace ducci {

// Bad input: negative entries, wrong length, unmet preconditions.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A trajectory ran past the caller-supplied step cap.
class StepCapExceeded : public std::runtime_error {
public:
    explicit StepCapExceeded(std::size_t cap)
        : std::runtime_error("trajectory exceeded step cap of " + std::to_string(cap)),
          cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

// A search or enumeration would exceed its configured budget.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The request is well-formed but has no answer (no preimage, k = 2 build).
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ducci
