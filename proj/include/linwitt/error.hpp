#pragma once

#include <stdexcept>
#include <string>

namespace linwitt {

enum class ErrorKind {
  InvalidForm,
  InvalidArgument,
  Parse,
  Capability,
  SmoothnessRequired,
  TShapeRequired,
  Unsupported,
  InvalidStratification,
  InternalConsistency,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidForm: return "invalid-form";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Capability: return "capability";
    case ErrorKind::SmoothnessRequired: return "smoothness-required";
    case ErrorKind::TShapeRequired: return "t-shape-required";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::InvalidStratification: return "invalid-stratification";
    case ErrorKind::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

/// Every error raised by the library carries a kind so front ends can map
/// it to an exit status without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace linwitt
