#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trieval {

/// Invalid data handed to an evaluation routine (empty dataset, missing
/// class, counts out of range).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid configuration value (bad cap, bad mode, inconsistent sim sizes).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed score file; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Filesystem failure while writing results.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace trieval
