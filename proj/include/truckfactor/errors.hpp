#pragma once

#include <stdexcept>
#include <string>

namespace truckfactor {

// Base class for every error raised by the library. Callers that only want
// to report a message can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotARepository : public Error {
 public:
  explicit NotARepository(const std::string& path);
};

class EmptyRepository : public Error {
 public:
  explicit EmptyRepository(const std::string& path);
};

// A git subprocess exited non-zero or could not be started. `diagnostics`
// holds whatever the child wrote to stderr.
class GitInvocationFailed : public Error {
 public:
  GitInvocationFailed(const std::string& command, int exit_code,
                      std::string diagnostics);

  int exit_code() const { return exit_code_; }
  const std::string& diagnostics() const { return diagnostics_; }

 private:
  int exit_code_;
  std::string diagnostics_;
};

class BlameFailed : public Error {
 public:
  BlameFailed(const std::string& file, const std::string& reason);
};

class DivisionUndefined : public Error {
 public:
  using Error::Error;
};

class EmptyMap : public Error {
 public:
  EmptyMap();
};

// Malformed user input: override files, pattern files, option values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace truckfactor
