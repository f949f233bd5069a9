#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace screenbench {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the file and 1-based line where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string path, std::size_t line)
        : Error(path + ":" + std::to_string(line) + ": " + message),
          path_(std::move(path)),
          line_(line) {}

    const std::string& path() const { return path_; }
    std::size_t line() const { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

/// Input violates a documented precondition or invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Tensor/layer dimension mismatch.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Transport-level failure talking to a literature API.
class FetchError : public Error {
public:
    using Error::Error;
};

/// Non-finite value where a finite one is required.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Bad or incomplete run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace screenbench
