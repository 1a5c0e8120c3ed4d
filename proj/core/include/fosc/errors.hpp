#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fosc {

/// Bad user input detected before any computation starts (unknown builtin,
/// invalid flag value, malformed config file, ...).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error in an expression string; carries the byte offset of the
/// offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Domain violation surfaced while evaluating an expression (ln of a
/// non-positive value, division by zero, ...); carries the offending input.
class eval_error : public std::runtime_error {
public:
    eval_error(const std::string& msg, double input)
        : std::runtime_error(msg), input_(input) {}

    double input() const { return input_; }

private:
    double input_;
};

/// Numeric failure mid-computation: non-finite state, singular frequency.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fosc
