#pragma once

#include <stdexcept>
#include <string>

namespace hallforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search would exceed the configured bounds.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its domain, e.g. reflection at an imaginary vertex.
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed where they must not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hallforge
