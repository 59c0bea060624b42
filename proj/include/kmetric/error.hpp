#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmetric {

enum class Errc {
  OutOfRange,
  SelfLoop,
  EmptyGraph,
  Disconnected,
  NotAnEdge,
  InvalidParams,
  UnknownFixture,
  SamePair,
  TooSmall,
  EmptyM,
  RadiusOutOfRange,
  NotEqualBoundary,
  TooLarge,
  NotBlockGraph,
  Elementary,
  EmptyE,
  ParseError,
  OracleTooLarge,
  IoError,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::SamePair: return "SamePair";
    case Errc::TooSmall: return "TooSmall";
    case Errc::EmptyM: return "EmptyM";
    case Errc::RadiusOutOfRange: return "RadiusOutOfRange";
    case Errc::NotEqualBoundary: return "NotEqualBoundary";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotBlockGraph: return "NotBlockGraph";
    case Errc::Elementary: return "Elementary";
    case Errc::EmptyE: return "EmptyE";
    case Errc::ParseError: return "ParseError";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; `code()`
/// identifies the failure class so callers (and tests) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kmetric
