#pragma once

#include <stdexcept>
#include <string>

namespace hsamuel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: parse errors, undeclared variables, bad moduli.
class InputError : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

/// A configurable ceiling (truncation degree, colon chain length, retries) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition on ideal containment was violated.
class NotContained : public Error {
 public:
  using Error::Error;
};

/// A computed quantity contradicts an exact identity the engine relies on.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace hsamuel
