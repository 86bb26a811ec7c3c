#pragma once

#include <stdexcept>
#include <string>

namespace gblx {

// Everything the library can refuse to do maps onto one of these.
// The C layer translates them one-to-one into status codes.
enum class errc {
  parse = 1,         // unlexable or ungrammatical formula/equation text
  invalid = 2,       // malformed table, broken invariant, bad reference
  cap = 3,           // configured resource cap exceeded
  not_found = 4,     // unknown element, modal, suite or preset name
  io = 5,            // file or JSON envelope trouble
  precondition = 6,  // operation applied outside its declared domain
};

// `where` is a byte offset into the offending source text for parse
// errors, -1 everywhere else.
struct error : std::runtime_error {
  errc code;
  long where = -1;

  error(errc c, const std::string& msg, long at = -1)
      : std::runtime_error(msg), code(c), where(at) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg, long at = -1) {
  throw error(c, msg, at);
}

}  // namespace gblx
