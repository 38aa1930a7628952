#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace etsc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Data that parses but violates a model precondition.
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace etsc
