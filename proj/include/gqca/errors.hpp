#pragma once

#include <stdexcept>
#include <string>

namespace gqca {

// Error taxonomy mirrored by the CLI exit codes: capacity -> 3,
// configuration -> 4, failed claim checks -> 2.

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScheduleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeometryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PathError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CpViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LedgerError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClaimCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gqca
