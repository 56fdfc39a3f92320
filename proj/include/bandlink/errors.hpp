#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bandlink {

enum class ErrorCode {
  DanglingArc,
  ComponentMismatch,
  BadComponentRange,
  EmptySelection,
  BadCrossingIndex,
  SameComponent,
  NTooSmall,
  IndexOutOfRange,
  BadPosition,
  MalformedSyllable,
  NotAdjacent,
  IndexTooShort,
  TruncationInsufficient,
  NotNormalForm,
  NormalizationStalled,
  NotBrunnian,
  ComponentCountMismatch,
  Overflow,
  ParseError,
  InternalError,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DanglingArc: return "DanglingArc";
    case ErrorCode::ComponentMismatch: return "ComponentMismatch";
    case ErrorCode::BadComponentRange: return "BadComponentRange";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::BadCrossingIndex: return "BadCrossingIndex";
    case ErrorCode::SameComponent: return "SameComponent";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadPosition: return "BadPosition";
    case ErrorCode::MalformedSyllable: return "MalformedSyllable";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::IndexTooShort: return "IndexTooShort";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::NormalizationStalled: return "NormalizationStalled";
    case ErrorCode::NotBrunnian: return "NotBrunnian";
    case ErrorCode::ComponentCountMismatch: return "ComponentCountMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }

  // Optional machine-readable payload, serialized JSON. Set by throwers that
  // have structured context to report (e.g. partial progress).
  Error& with_payload(std::string json) {
    payload_ = std::move(json);
    return *this;
  }
  const std::string& payload() const { return payload_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::string payload_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) fail(code, message);
}

// Overflow-checked 64-bit arithmetic. Series coefficients and invariant
// values must never wrap silently.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) fail(ErrorCode::Overflow, "integer negation overflow");
  return r;
}

}  // namespace bandlink
