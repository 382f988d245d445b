#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hornfb {

// Malformed or ill-typed input text. Line and column are 1-based; 0 means unknown.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string &msg, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    static std::string format(const std::string &msg, std::size_t line, std::size_t column) {
        if (line == 0)
            return msg;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
    }

    std::size_t line_;
    std::size_t column_;
};

// Well-formed input that the requested operation cannot accept (e.g. no universe).
class input_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A configured resource bound was exceeded. Never silently approximated.
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An exact re-check of an analysis result failed. Indicates a bug, not bad input.
class certification_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace hornfb
