#include "knapkern/error.hpp"

namespace knapkern {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::schema: return "schema";
    case ErrorCode::invariant: return "invariant";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::guard: return "guard";
    case ErrorCode::budget: return "budget";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace knapkern
