#pragma once

#include <string>

#include "core/algebra.hpp"
#include "core/poset.hpp"

namespace gblx {

// Algebra files: {"name", "carrier": [names], "meet"/"join"/"mult": n x n
// row-major integer matrices, "impl" likewise but optional (derived from
// meet/join/mult when absent), "zero"/"one": indices, "modals": {name:
// [n entries]}.  Modal declaration order follows the JSON object order.
finite_algebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const finite_algebra& a);

// Poset files: {"elements": [names], "lt": [[i,j], ...]} with lt the strict
// order given by index pairs; transitively closed on load.
finite_poset poset_from_json(const std::string& text);
std::string poset_to_json(const finite_poset& p);

}  // namespace gblx
