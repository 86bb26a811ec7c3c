#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/formula.hpp"

namespace gblx {

// Recursive-descent parser for the surface grammar.  Binding strength,
// tightest first: ~ and modal application, *, &, |, -> (right-associative),
// <-> (left-associative).  ~f abbreviates (f -> 0), f <-> g abbreviates
// ((f -> g) & (g -> f)), P/F abbreviate ~H~ / ~G~ and require H resp. G in
// the signature.  Whitespace is insignificant.  Errors are errc::parse and
// carry the byte offset of the offending token.
fptr parse_formula(const std::string& text, const std::vector<std::string>& signature);

// "<formula> = <formula>"
std::pair<fptr, fptr> parse_equation(const std::string& text,
                                     const std::vector<std::string>& signature);

}  // namespace gblx
