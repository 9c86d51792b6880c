#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathcover {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& message) : std::runtime_error(message) {}
};

// Input violates a size cap (vertex count, search overflow).
class size_error : public error {
public:
    explicit size_error(const std::string& message) : error(message) {}
};

// Invalid argument to an operation (bad vertex, existing edge, unknown name).
class argument_error : public error {
public:
    explicit argument_error(const std::string& message) : error(message) {}
};

// Invalid generator parameters (violated family constraints).
class parameter_error : public error {
public:
    explicit parameter_error(const std::string& message) : error(message) {}
};

// Malformed textual input; carries the byte offset of the first bad byte.
class parse_error : public error {
public:
    parse_error(const std::string& message, std::size_t byte_offset)
        : error(message + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// Operation precondition not met on an otherwise valid input
// (e.g. decomposing a graph that is not maximal).
class domain_error : public error {
public:
    explicit domain_error(const std::string& message) : error(message) {}
};

// The library derived contradictory facts; indicates a misclassified input
// or an internal bug. Never silently repaired.
class internal_error : public error {
public:
    explicit internal_error(const std::string& message) : error(message) {}
};

}  // namespace pathcover
