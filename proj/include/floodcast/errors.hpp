#pragma once

#include <stdexcept>
#include <string>

namespace floodcast {

// Bad configuration value or unknown key; the message names the field.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data: CSV parse failures, duplicate
// timestamps, gaps, misaligned series, insufficient rows.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A metric ratio would divide by zero (constant series, zero mean).
class DegenerateInputError : public std::runtime_error {
public:
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Too few peak rows to train the peak forest; callers fall back to the
// baseline-only forecast.
class PeakModelUnavailable : public std::runtime_error {
public:
    explicit PeakModelUnavailable(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace floodcast
