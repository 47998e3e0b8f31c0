#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knapkern {

enum class ErrorCode {
  schema,        // malformed JSON or wrong field types
  invariant,     // well-formed input violating a domain invariant
  precondition,  // operation called outside its contract
  guard,         // desk-scale size guard exceeded
  budget,        // search budget exhausted
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace knapkern
