#ifndef SMLAB_ERROR_HPP
#define SMLAB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace smlab {

/// Bad call-site input (shape mismatch, out-of-range value, invalid config).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but mathematically degenerate (e.g. all points equal).
struct DegenerateInputError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed on-disk data. Carries the byte offset where decoding failed.
struct FormatError : std::runtime_error {
    FormatError(const std::string& what, std::uint64_t offset_)
        : std::runtime_error(what + " (at byte offset " + std::to_string(offset_) + ")"),
          offset(offset_) {}
    std::uint64_t offset = 0;
};

/// Physically impossible simulation request (e.g. camera outside the room).
struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Training diverged (non-finite loss or gradients).
struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem failure, annotated with the path involved.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace smlab

#endif // SMLAB_ERROR_HPP
