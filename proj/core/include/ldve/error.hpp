#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ldve {

// All failures in the library carry a stable machine-readable code next to
// the human-readable message. The CLI forwards the code verbatim in its
// error records, so codes are part of the external interface.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* format = "format-error";
inline constexpr const char* truncation = "truncation";
inline constexpr const char* unsupported_format = "unsupported-format";
inline constexpr const char* shape_mismatch = "shape-mismatch";
inline constexpr const char* length_mismatch = "length-mismatch";
inline constexpr const char* empty_sequence = "empty-sequence";
inline constexpr const char* insufficient_frames = "insufficient-frames";
inline constexpr const char* chroma_rotation = "chroma-rotation";
inline constexpr const char* plan_invalid = "plan-invalid";
inline constexpr const char* protocol = "protocol-error";
inline constexpr const char* external_tool = "external-tool";
inline constexpr const char* window = "window-error";
inline constexpr const char* invalid_argument = "invalid-argument";
inline constexpr const char* input_not_found = "input-not-found";
inline constexpr const char* io = "io-error";
inline constexpr const char* config = "config-error";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, const char* code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace ldve
