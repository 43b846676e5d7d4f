#pragma once

#include <stdexcept>
#include <string>

namespace rfml {

// Error families. The CLI maps each family to its own exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

// Bytes were read but do not match the expected layout (magic, version, sizes).
class FormatError : public Error {
public:
    using Error::Error;
};

// Experiment configuration is malformed or references unknown keys.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace rfml
