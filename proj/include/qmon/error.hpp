#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmon {

enum class ErrorCode {
  parse_error,
  empty_word,
  not_primitive,
  precondition_violated,
  internal_inconsistency,
  iteration_cap_exceeded,
  cap_exceeded,
  alphabet_mismatch,
  identity_image,
  recipe_mismatch,
  not_embeddable,
  degenerate_system,
  verification_failed,
  root_mismatch,
  no_rotation_applicable,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::empty_word: return "EmptyWord";
    case ErrorCode::not_primitive: return "NotPrimitive";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::internal_inconsistency: return "InternalInconsistency";
    case ErrorCode::iteration_cap_exceeded: return "IterationCapExceeded";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::alphabet_mismatch: return "AlphabetMismatch";
    case ErrorCode::identity_image: return "IdentityImage";
    case ErrorCode::recipe_mismatch: return "RecipeMismatch";
    case ErrorCode::not_embeddable: return "NotEmbeddable";
    case ErrorCode::degenerate_system: return "DegenerateSystem";
    case ErrorCode::verification_failed: return "VerificationFailed";
    case ErrorCode::root_mismatch: return "RootMismatch";
    case ErrorCode::no_rotation_applicable: return "NoRotationApplicable";
  }
  return "Unknown";
}

// Every failure in the library is reported through this type; the code
// identifies the contract that was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace detail
}  // namespace qmon
