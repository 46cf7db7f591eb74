#pragma once

#include <stdexcept>
#include <string>

namespace rimer {

// Error taxonomy shared by the core, the C API and the CLI. The coarse
// numeric codes (exit_code) are part of the external contract:
//   0 ok, 2 config, 3 data, 4 divergence, 5 gradcheck failure.
enum class ErrorKind {
  internal,
  config,
  data,
  divergence,
  gradcheck,
  dimension,
  non_finite,
  contract,
  non_convergence,
  format,
  io,
};

inline const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::internal: return "internal";
    case ErrorKind::config: return "config";
    case ErrorKind::data: return "data";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::gradcheck: return "gradcheck";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::non_finite: return "non-finite";
    case ErrorKind::contract: return "contract";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::format: return "format";
    case ErrorKind::io: return "io";
  }
  return "internal";
}

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config:
    case ErrorKind::dimension:
    case ErrorKind::contract:
      return 2;
    case ErrorKind::data:
    case ErrorKind::format:
    case ErrorKind::io:
      return 3;
    case ErrorKind::divergence:
    case ErrorKind::non_finite:
    case ErrorKind::non_convergence:
      return 4;
    case ErrorKind::gradcheck:
      return 5;
    case ErrorKind::internal:
      return 1;
  }
  return 1;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace rimer
