#pragma once

#include <stdexcept>
#include <string>

namespace vecsim {

/// Base for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: config values, CLI flags, workload files. Maps to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A workload or platform record violates one of its invariants.
class ValidationError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Malformed file contents.
class ParseError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// A reservation was requested on a node with no idle core. Always an engine bug.
class AdmissionError : public Error {
public:
    using Error::Error;
};

/// A metric is undefined for the given input (e.g. an empty trace).
class MetricError : public Error {
public:
    using Error::Error;
};

}  // namespace vecsim
