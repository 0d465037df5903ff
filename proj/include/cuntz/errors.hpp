#pragma once

#include <stdexcept>
#include <string>

namespace cuntz {

// Failure categories surfaced by the library.  The CLI maps `parse` to
// exit code 2 and everything else to exit code 1.
enum class errc {
  alphabet_mismatch,
  index_out_of_range,
  precondition,
  not_injective,
  incompatible,
  no_caret,
  not_idempotent,
  not_composable,
  resource_limit,
  parse,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace cuntz
