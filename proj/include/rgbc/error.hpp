#pragma once

#include <stdexcept>
#include <string>

namespace rgbc {

// Failure categories used across the library. ConfigError marks invalid
// user-supplied input (CLI exit code 2); the rest are numeric or domain
// failures (CLI exit code 3).
enum class Errc {
  ConfigError,
  NonConvexDomain,
  OriginOutside,
  OutOfDomain,
  DegenerateN,
  TooLarge,
  InsufficientData,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ConfigError: return "ConfigError";
    case Errc::NonConvexDomain: return "NonConvexDomain";
    case Errc::OriginOutside: return "OriginOutside";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::DegenerateN: return "DegenerateN";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InsufficientData: return "InsufficientData";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* kind() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rgbc
