#pragma once

#include <stdexcept>
#include <string>

namespace sdfs {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition (bad dims, r < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The Fock truncation needed exceeds the dense cap, or a state is visibly
/// under-truncated.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A numerical invariant (conservation, normalization) is broken beyond its
/// tolerance.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed run configuration. `key` names the offending key when known,
/// `line` is 1-based (0 when not tied to a line).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string key = {}, int line = 0)
      : Error(what), key_(std::move(key)), line_(line) {}

  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

 private:
  std::string key_;
  int line_;
};

}  // namespace sdfs
