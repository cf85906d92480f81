#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbertimg {

/// Root of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a curve or encoding operation.
class domain_error : public error {
public:
    using error::error;
};

/// Curve parameters whose point count cannot be represented losslessly.
class sizing_error : public error {
public:
    using error::error;
};

/// A sequence could not be turned into an image.
class encode_error : public error {
public:
    using error::error;
};

/// Malformed input text. `line()` is 1-based; 0 when no line applies.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line)
        : error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structured input lacks a required column or key.
class schema_error : public error {
public:
    using error::error;
};

class split_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

/// Bad command-line or config-file usage.
class usage_error : public error {
public:
    using error::error;
};

}  // namespace hilbertimg
