#pragma once

#include <stdexcept>
#include <string>

namespace nocforge {

// Error taxonomy shared across the library. The CLI maps ConfigError to
// exit status 1 and every other Error to 2.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-supplied configuration: unknown preset, size mismatch, missing
// file, out-of-range parameter.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Structural constraint violated by otherwise well-formed data
// (disconnected graph, negative rate, degree bound exceeded).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Input text that could not be decoded; carries a 1-based line number
// when one is known.
class ParseError : public Error {
public:
  ParseError(const std::string& what, long line = 0)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

// An operation was invoked on inputs its contract excludes.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// MAC protocol misuse, e.g. a request from a WI outside the channel.
class ProtocolError : public Error {
public:
  explicit ProtocolError(const std::string& what) : Error(what) {}
};

}  // namespace nocforge
