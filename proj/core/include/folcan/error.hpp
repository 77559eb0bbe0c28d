#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace folcan {

enum class ErrorCode {
  ParseError,
  SingularMatrix,
  DimensionMismatch,
  NotNegativeDefinite,
  InvalidOverride,
  InvalidProfile,
  NotIntegral,
  NonPositiveVolume,
  InvalidInput,
  NonIntegralGenus,
  NegativeGenus,
  InternalInconsistency,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code plus free-form context.
///
/// The CLI maps these onto its `{code, message, context}` error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

}  // namespace folcan
