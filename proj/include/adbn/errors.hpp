#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adbn {

// Thrown when an exact computation would exceed its size guard
// (e.g. partition-function enumeration on a model that is too large).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when training produces a non-finite parameter or gradient.
class TrainingFault : public std::runtime_error {
public:
    TrainingFault(const std::string& what, std::size_t epoch)
        : std::runtime_error(what + " (epoch " + std::to_string(epoch) + ")"), epoch_(epoch) {}

    std::size_t epoch() const { return epoch_; }

private:
    std::size_t epoch_;
};

}  // namespace adbn
