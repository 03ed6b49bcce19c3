#pragma once

#include <stdexcept>
#include <string>

namespace heliodet {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input: malformed files, bad arguments, out-of-range config values.
/// Maps to CLI exit code 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Malformed file content (codec, label, config text).
class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& msg) : ValidationError(msg) {}
};

/// Incompatible tensor/layer dimensions.
class ShapeError : public ValidationError {
public:
    explicit ShapeError(const std::string& msg) : ValidationError(msg) {}
};

/// Bad configuration key or value.
class ConfigError : public ValidationError {
public:
    explicit ConfigError(const std::string& msg) : ValidationError(msg) {}
};

/// Filesystem failures: missing files, unwritable paths. Maps to CLI exit code 2.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace heliodet
