#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace capt {

enum class ErrorCode {
  DuplicateToken,
  InventorySize,
  MalformedEntry,
  UnknownPhoneme,
  MalformedSequence,
  UnsupportedCharacter,
  UnknownGrapheme,
  UnsupportedWav,
  MalformedWav,
  InvalidArgument,
  InvalidProbability,
  InconsistentInput,
  IncompleteKnowledgeBase,
  MalformedManifest,
  TtsFailure,
  RecognizerUnavailable,
  Io,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateToken: return "DuplicateToken";
    case ErrorCode::InventorySize: return "InventorySize";
    case ErrorCode::MalformedEntry: return "MalformedEntry";
    case ErrorCode::UnknownPhoneme: return "UnknownPhoneme";
    case ErrorCode::MalformedSequence: return "MalformedSequence";
    case ErrorCode::UnsupportedCharacter: return "UnsupportedCharacter";
    case ErrorCode::UnknownGrapheme: return "UnknownGrapheme";
    case ErrorCode::UnsupportedWav: return "UnsupportedWav";
    case ErrorCode::MalformedWav: return "MalformedWav";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::IncompleteKnowledgeBase: return "IncompleteKnowledgeBase";
    case ErrorCode::MalformedManifest: return "MalformedManifest";
    case ErrorCode::TtsFailure: return "TtsFailure";
    case ErrorCode::RecognizerUnavailable: return "RecognizerUnavailable";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library. `detail()` carries the offending
/// value (a symbol, a byte offset, a file path) without the code prefix.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace capt
