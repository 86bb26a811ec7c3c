#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/formula.hpp"
#include "core/semantics.hpp"

namespace gblx {

enum class scheme_id {
  a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13, a14, a15,
  k, p, m, one, zero, t, four, gp, hf,
};

const char* scheme_name(scheme_id s);
std::optional<scheme_id> scheme_from_name(const std::string& name);
bool scheme_takes_modal(scheme_id s);  // K, P, M, One, Zero, T, Four

// Metavariable bindings, in order phi, psi, chi.  Null = unbound.
struct substitution {
  std::array<fptr, 3> map;
};

// The scheme pattern instantiated by the substitution; every metavariable
// the scheme mentions must be bound (errc::invalid).  `modal` names the
// operator for the parameterized schemes and is ignored otherwise.
fptr instantiate(scheme_id s, const substitution& sub, const std::string& modal = "");

// Unique substitution making the scheme equal to f, if any.  Biconditional
// and negation abbreviations in schemes are expanded before matching.
std::optional<substitution> match_axiom(const fptr& f, scheme_id s,
                                        const std::string& modal = "");

enum class preset_id { gbl, bl, l, l_i, s4l_i, s4l, s4tl };

struct logic_preset {
  preset_id id;
  std::string name;
  std::vector<std::string> signature;  // modal names, empty for propositional
  std::vector<scheme_id> schemes;
  bool has_nec = false;
};

// Presets: GBL, BL, L, L(I), S4L(I), S4L, S4tL.  The parameterized names
// take their modal set from `modals` (default {box}); S4L is fixed to
// {box}, S4tL to {G, H}, the propositional presets to none.
logic_preset make_preset(const std::string& name, const std::vector<std::string>& modals = {});

// Each scheme paired with every modal name it ranges over ("" for the
// propositional schemes and for GP/HF, whose operators are fixed).
std::vector<std::pair<scheme_id, std::string>> preset_axiom_instances(const logic_preset& lp);

struct justification {
  enum class kind { premise, axiom, mp, nec };
  kind k = kind::axiom;
  int ref1 = -1, ref2 = -1;  // 1-based premise/step references as written
  scheme_id scheme = scheme_id::a1;
  std::string modal;
  std::optional<substitution> sub;  // explicit bindings, checked verbatim
};

struct derivation {
  logic_preset preset;
  std::vector<fptr> premises;
  std::vector<std::pair<fptr, justification>> steps;
};

// {"logic": name, "modals": [names]?, "premises": [strings],
//  "steps": [{"formula": string, "by": string, "subst": {...}?}]}
// "by" is one of "Premise i", "MP i j" (i the antecedent), "Nec i name",
// or a scheme name optionally followed by its modal.  "signature" is
// accepted as a synonym for "modals".
derivation derivation_from_json(const std::string& text);

struct derivation_report {
  bool ok = true;
  int bad_step = -1;  // 1-based
  std::string reason;
};

derivation_report check_derivation(const derivation& d);

struct soundness_report {
  bool holds = true;
  consequence_report consequence;
};

// The algebraic counterpart of the derivation: premises = 1 entail the
// conclusion = 1 over the listed algebras.  The derivation must check and
// every algebra must classify into the preset's variety (errc::precondition).
soundness_report soundness_spotcheck(const derivation& d,
                                     const std::vector<const finite_algebra*>& algebras);

}  // namespace gblx
