#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsmt {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Frame size outside the supported range [1, 16].
class FrameError : public Error {
 public:
  using Error::Error;
};

// Focal expression text could not be parsed; carries the byte offset of the
// offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Expression references a singleton index outside [1, n], or a code carries
// a part id the frame does not know.
class EvalError : public Error {
 public:
  using Error::Error;
};

// Mass vector malformed: length mismatch, negative mass, or sum != 1.
class MassError : public Error {
 public:
  using Error::Error;
};

// Requested enumeration would exceed the configured entry budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Bad parameter to a combination or decision operation.
class ParamError : public Error {
 public:
  using Error::Error;
};

// Combination collapsed onto the empty element (k ~ 1) where the rule
// forbids it.
class TotalConflictError : public Error {
 public:
  using Error::Error;
};

// Criterion number is reserved but not implemented.
class UnsupportedRuleError : public Error {
 public:
  using Error::Error;
};

// Fusion config rejected; message carries the JSON field path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsmt
