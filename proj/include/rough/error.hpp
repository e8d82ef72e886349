#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rough {

enum class ErrorKind {
  UniverseMismatch,
  UnknownAtom,
  Parse,
  Model,
  CapExceeded,
  Undefined,
  Precondition,
  CarrierMismatch,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UniverseMismatch: return "universe-mismatch";
    case ErrorKind::UnknownAtom: return "unknown-atom";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Model: return "model-error";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::Undefined: return "undefined";
    case ErrorKind::Precondition: return "precondition-violated";
    case ErrorKind::CarrierMismatch: return "carrier-mismatch";
  }
  return "error";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse failure with the byte offset into the input where it was detected.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        detail_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

private:
  std::string detail_;
  std::size_t position_;
};

/// Evaluation failure tagged with the offending subterm and its offset.
class EvalError : public Error {
public:
  EvalError(ErrorKind kind, std::string subterm, std::size_t position, const std::string& what)
      : Error(kind, what + " in '" + subterm + "' at position " + std::to_string(position)),
        subterm_(std::move(subterm)),
        position_(position) {}

  const std::string& subterm() const noexcept { return subterm_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::string subterm_;
  std::size_t position_;
};

}  // namespace rough
