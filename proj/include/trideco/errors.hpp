// Error taxonomy shared across the library; exit-code mapping lives in the CLI.
#pragma once

#include <stdexcept>
#include <string>

namespace trideco {

enum class ErrorKind {
  kInput,     // malformed or mathematically inconsistent input data
  kProperty,  // a verified mathematical property failed on valid-looking data
  kInternal,  // invariant breach inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& msg) { return Error(ErrorKind::kInput, msg); }
inline Error property_error(const std::string& msg) { return Error(ErrorKind::kProperty, msg); }
inline Error internal_error(const std::string& msg) { return Error(ErrorKind::kInternal, msg); }

}  // namespace trideco
