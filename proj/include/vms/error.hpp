#pragma once

#include <stdexcept>
#include <string>

namespace vms {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input: bad indices, malformed files, dimension mismatches.
// The CLI maps this to exit code 2.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A request that cannot be satisfied: quantization budget unreachable,
// no feasible kernel configuration. CLI exit code 3.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& msg) : Error(msg) {}
};

// File parse failure carrying file name and line (or byte offset).
class ParseError : public ValidationError {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& msg)
        : ValidationError(file + ":" + std::to_string(line) + ": " + msg),
          file_(file), line_(line) {}

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

} // namespace vms
