#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/formula.hpp"

namespace gblx {

// Total map from the variable indices of interest to carrier elements.
// `vars` is sorted ascending and parallel to `vals`.
struct assignment {
  std::vector<int> vars;
  std::vector<idx> vals;
  idx value_of(int var) const;  // not_found when the variable is absent
};

struct equation {
  fptr lhs, rhs;
};

idx evaluate(const finite_algebra& a, const assignment& h, const fptr& f);

struct validity_report {
  bool valid = true;
  std::optional<assignment> countermodel;  // lexicographically least failure
  long assignments_checked = 0;
};

// Exhaustive sweep over all assignments to the equation's variables.
// Assignments are ordered lexicographically with the smallest variable
// index most significant.  Obeys the assignment caps (errc::cap).
validity_report is_valid(const finite_algebra& a, const equation& eq);

struct consequence_report {
  bool holds = true;
  int algebra_index = -1;  // position of the witnessing algebra
  std::optional<assignment> witness;
  long assignments_checked = 0;
};

// Finite-class consequence: in every listed algebra, every assignment
// satisfying all premises must satisfy the conclusion.
consequence_report semantic_consequence(const std::vector<const finite_algebra*>& ks,
                                        const std::vector<equation>& premises,
                                        const equation& conclusion);

struct translation_report {
  bool pass = true;
  std::string mode;  // "box" or "tense"
  bool pointwise = true;
  bool validity = true;
  bool fixedness = true;
  long assignments_checked = 0;
  std::optional<assignment> witness;
  std::string detail;
};

// For a pure formula f and a modal algebra A, checks that translating f
// commutes with evaluation through the interior image of A:
//   (a) pointwise: composing assignments with the modal and evaluating f
//       in the image agrees with evaluating the translated formula in A;
//   (b) validity: f = 1 holds in the image iff its translation holds in A;
//   (c) fixedness: the translated formula always evaluates to a fixpoint.
// A single modal selects the box translation; signature {G, H} selects
// the tense translation through G.
translation_report check_translation_equivalence(const finite_algebra& a, const fptr& f);

}  // namespace gblx
