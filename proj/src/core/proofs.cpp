#include "core/proofs.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"
#include "core/parse.hpp"

namespace gblx {

namespace {

const std::pair<scheme_id, const char*> kSchemeNames[] = {
    {scheme_id::a1, "A1"},     {scheme_id::a2, "A2"},   {scheme_id::a3, "A3"},
    {scheme_id::a4, "A4"},     {scheme_id::a5, "A5"},   {scheme_id::a6, "A6"},
    {scheme_id::a7, "A7"},     {scheme_id::a8, "A8"},   {scheme_id::a9, "A9"},
    {scheme_id::a10, "A10"},   {scheme_id::a11, "A11"}, {scheme_id::a12, "A12"},
    {scheme_id::a13, "A13"},   {scheme_id::a14, "A14"}, {scheme_id::a15, "A15"},
    {scheme_id::k, "K"},       {scheme_id::p, "P"},     {scheme_id::m, "M"},
    {scheme_id::one, "One"},   {scheme_id::zero, "Zero"}, {scheme_id::t, "T"},
    {scheme_id::four, "Four"}, {scheme_id::gp, "GP"},   {scheme_id::hf, "HF"},
};

}  // namespace

const char* scheme_name(scheme_id s) {
  for (const auto& [id, name] : kSchemeNames)
    if (id == s) return name;
  return "?";
}

std::optional<scheme_id> scheme_from_name(const std::string& name) {
  for (const auto& [id, n] : kSchemeNames)
    if (name == n) return id;
  return std::nullopt;
}

bool scheme_takes_modal(scheme_id s) {
  switch (s) {
    case scheme_id::k:
    case scheme_id::p:
    case scheme_id::m:
    case scheme_id::one:
    case scheme_id::zero:
    case scheme_id::t:
    case scheme_id::four:
      return true;
    default:
      return false;
  }
}

namespace {

fptr scheme_pattern(scheme_id s, const std::string& modal) {
  using F = formula;
  fptr A = F::mk_var(0), B = F::mk_var(1), C = F::mk_var(2);
  auto box = [&](fptr f) {
    if (modal.empty()) fail(errc::invalid, "scheme needs a modal name");
    return F::mk_modal(modal, std::move(f));
  };
  switch (s) {
    case scheme_id::a1: return F::mk_imp(A, A);
    case scheme_id::a2:
      return F::mk_imp(F::mk_imp(A, B), F::mk_imp(F::mk_imp(B, C), F::mk_imp(A, C)));
    case scheme_id::a3: return F::mk_imp(F::mk_fuse(A, B), F::mk_fuse(B, A));
    case scheme_id::a4: return F::mk_imp(F::mk_fuse(A, B), B);
    case scheme_id::a5:
      return F::mk_imp(F::mk_imp(A, F::mk_imp(B, C)), F::mk_imp(F::mk_fuse(A, B), C));
    case scheme_id::a6:
      return F::mk_imp(F::mk_imp(F::mk_fuse(A, B), C), F::mk_imp(A, F::mk_imp(B, C)));
    case scheme_id::a7:
      return F::mk_imp(F::mk_fuse(A, F::mk_imp(A, B)), F::mk_meet(A, B));
    case scheme_id::a8:
      return F::mk_imp(F::mk_meet(A, B), F::mk_fuse(A, F::mk_imp(A, B)));
    case scheme_id::a9: return F::mk_imp(F::mk_meet(A, B), F::mk_meet(B, A));
    case scheme_id::a10: return F::mk_imp(A, F::mk_join(A, B));
    case scheme_id::a11: return F::mk_imp(B, F::mk_join(A, B));
    case scheme_id::a12:
      return F::mk_imp(F::mk_meet(F::mk_imp(A, B), F::mk_imp(C, B)),
                       F::mk_imp(F::mk_join(A, C), B));
    case scheme_id::a13: return F::mk_imp(F::mk_zero(), A);
    case scheme_id::a14: return F::mk_join(F::mk_imp(A, B), F::mk_imp(B, A));
    case scheme_id::a15: return F::mk_iff(F::mk_neg(F::mk_neg(A)), A);
    case scheme_id::k:
      return F::mk_imp(box(F::mk_imp(A, B)), F::mk_imp(box(A), box(B)));
    case scheme_id::p:
      return F::mk_iff(box(F::mk_fuse(A, B)), F::mk_fuse(box(A), box(B)));
    case scheme_id::m:
      return F::mk_iff(box(F::mk_meet(A, B)), F::mk_meet(box(A), box(B)));
    case scheme_id::one: return F::mk_iff(box(F::mk_one()), F::mk_one());
    case scheme_id::zero: return F::mk_iff(box(F::mk_zero()), F::mk_zero());
    case scheme_id::t: return F::mk_imp(box(A), A);
    case scheme_id::four: return F::mk_imp(box(A), box(box(A)));
    case scheme_id::gp:
      return F::mk_imp(A, F::mk_modal("G", F::mk_neg(F::mk_modal("H", F::mk_neg(A)))));
    case scheme_id::hf:
      return F::mk_imp(A, F::mk_modal("H", F::mk_neg(F::mk_modal("G", F::mk_neg(A)))));
  }
  fail(errc::invalid, "unknown scheme");
}

bool unify(const fptr& pat, const fptr& f, substitution& sub) {
  if (pat->kind == fk::var) {
    fptr& slot = sub.map[pat->var];
    if (!slot) {
      slot = f;
      return true;
    }
    return equal(slot, f);
  }
  if (f->kind != pat->kind) return false;
  switch (pat->kind) {
    case fk::zero:
    case fk::one:
      return true;
    case fk::modal:
      return f->modal == pat->modal && unify(pat->lhs, f->lhs, sub);
    default:
      return unify(pat->lhs, f->lhs, sub) && unify(pat->rhs, f->rhs, sub);
  }
}

fptr apply_substitution(const fptr& pat, const substitution& sub) {
  switch (pat->kind) {
    case fk::var: {
      const fptr& bound = sub.map[pat->var];
      if (!bound) fail(errc::invalid, "unbound metavariable in substitution");
      return bound;
    }
    case fk::zero:
    case fk::one:
      return pat;
    case fk::modal:
      return formula::mk_modal(pat->modal, apply_substitution(pat->lhs, sub));
    default:
      return formula::mk_binary(pat->kind, apply_substitution(pat->lhs, sub),
                                apply_substitution(pat->rhs, sub));
  }
}

}  // namespace

fptr instantiate(scheme_id s, const substitution& sub, const std::string& modal) {
  return apply_substitution(scheme_pattern(s, modal), sub);
}

std::optional<substitution> match_axiom(const fptr& f, scheme_id s, const std::string& modal) {
  if (!f) fail(errc::invalid, "null formula");
  substitution sub;
  if (unify(scheme_pattern(s, modal), f, sub)) return sub;
  return std::nullopt;
}

namespace {

void append_range(std::vector<scheme_id>& out, scheme_id from, scheme_id to) {
  for (int s = (int)from; s <= (int)to; ++s) out.push_back((scheme_id)s);
}

}  // namespace

logic_preset make_preset(const std::string& name, const std::vector<std::string>& modals) {
  logic_preset lp;
  lp.name = name;
  if (name == "GBL" || name == "BL" || name == "L") {
    lp.id = name == "GBL" ? preset_id::gbl : name == "BL" ? preset_id::bl : preset_id::l;
    if (!modals.empty()) fail(errc::invalid, name + " is a propositional preset, drop the modals");
    append_range(lp.schemes, scheme_id::a1, scheme_id::a13);
    if (lp.id != preset_id::gbl) lp.schemes.push_back(scheme_id::a14);
    if (lp.id == preset_id::l) lp.schemes.push_back(scheme_id::a15);
    return lp;
  }
  if (name == "L(I)" || name == "S4L(I)") {
    lp.id = name == "L(I)" ? preset_id::l_i : preset_id::s4l_i;
    lp.signature = modals.empty() ? std::vector<std::string>{"box"} : modals;
  } else if (name == "S4L") {
    lp.id = preset_id::s4l;
    if (!modals.empty() && modals != std::vector<std::string>{"box"})
      fail(errc::invalid, "S4L is fixed to the single modal 'box'");
    lp.signature = {"box"};
  } else if (name == "S4tL") {
    lp.id = preset_id::s4tl;
    if (!modals.empty() && modals != std::vector<std::string>{"G", "H"})
      fail(errc::invalid, "S4tL is fixed to the modals G, H");
    lp.signature = {"G", "H"};
  } else {
    fail(errc::invalid, "unknown logic preset '" + name + "'");
  }
  validate_signature(lp.signature);
  append_range(lp.schemes, scheme_id::a1, scheme_id::a15);
  append_range(lp.schemes, scheme_id::k, scheme_id::zero);
  if (lp.id != preset_id::l_i) {
    lp.schemes.push_back(scheme_id::t);
    lp.schemes.push_back(scheme_id::four);
  }
  if (lp.id == preset_id::s4tl) {
    lp.schemes.push_back(scheme_id::gp);
    lp.schemes.push_back(scheme_id::hf);
  }
  lp.has_nec = true;
  return lp;
}

std::vector<std::pair<scheme_id, std::string>> preset_axiom_instances(const logic_preset& lp) {
  std::vector<std::pair<scheme_id, std::string>> out;
  for (scheme_id s : lp.schemes) {
    if (scheme_takes_modal(s))
      for (const auto& m : lp.signature) out.emplace_back(s, m);
    else
      out.emplace_back(s, "");
  }
  return out;
}

namespace {

using json = nlohmann::ordered_json;

justification parse_justification(const std::string& by) {
  std::istringstream in(by);
  std::vector<std::string> tok;
  for (std::string w; in >> w;) tok.push_back(w);
  if (tok.empty()) fail(errc::parse, "empty justification");
  justification j;
  auto num = [&](size_t i, const char* what) {
    if (i >= tok.size()) fail(errc::parse, std::string("justification is missing ") + what);
    try {
      size_t used = 0;
      int v = std::stoi(tok[i], &used);
      if (used != tok[i].size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail(errc::parse, "justification reference '" + tok[i] + "' is not a number");
    }
  };
  if (tok[0] == "Premise") {
    j.k = justification::kind::premise;
    j.ref1 = num(1, "the premise number");
    if (tok.size() > 2) fail(errc::parse, "trailing text after premise reference");
    return j;
  }
  if (tok[0] == "MP") {
    j.k = justification::kind::mp;
    j.ref1 = num(1, "the antecedent step");
    j.ref2 = num(2, "the implication step");
    if (tok.size() > 3) fail(errc::parse, "trailing text after MP references");
    return j;
  }
  if (tok[0] == "Nec") {
    j.k = justification::kind::nec;
    j.ref1 = num(1, "the step to box");
    if (tok.size() < 3) fail(errc::parse, "Nec needs a modal name");
    j.modal = tok[2];
    if (tok.size() > 3) fail(errc::parse, "trailing text after Nec");
    return j;
  }
  auto s = scheme_from_name(tok[0]);
  if (!s) fail(errc::parse, "unknown justification '" + tok[0] + "'");
  j.k = justification::kind::axiom;
  j.scheme = *s;
  if (scheme_takes_modal(*s)) {
    if (tok.size() < 2) fail(errc::parse, std::string(tok[0]) + " needs a modal name");
    j.modal = tok[1];
    if (tok.size() > 2) fail(errc::parse, "trailing text after the modal name");
  } else if (tok.size() > 1) {
    fail(errc::parse, std::string(tok[0]) + " takes no modal name");
  }
  return j;
}

}  // namespace

derivation derivation_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse, std::string("bad derivation JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("logic") || !j["logic"].is_string())
    fail(errc::parse, "derivation needs a \"logic\" name");
  std::vector<std::string> modals;
  for (const char* key : {"modals", "signature"})
    if (j.contains(key)) {
      if (!j[key].is_array()) fail(errc::parse, "modal list must be an array of names");
      for (const auto& m : j[key]) {
        if (!m.is_string()) fail(errc::parse, "modal list must be an array of names");
        modals.push_back(m.get<std::string>());
      }
    }
  derivation d;
  d.preset = make_preset(j["logic"].get<std::string>(), modals);

  if (j.contains("premises")) {
    if (!j["premises"].is_array()) fail(errc::parse, "premises must be an array");
    for (const auto& p : j["premises"]) {
      if (!p.is_string()) fail(errc::parse, "premises must be formula strings");
      d.premises.push_back(parse_formula(p.get<std::string>(), d.preset.signature));
    }
  }
  if (!j.contains("steps") || !j["steps"].is_array() || j["steps"].empty())
    fail(errc::parse, "derivation needs a nonempty \"steps\" array");
  for (const auto& st : j["steps"]) {
    if (!st.is_object() || !st.contains("formula") || !st.contains("by") ||
        !st["formula"].is_string() || !st["by"].is_string())
      fail(errc::parse, "each step needs a \"formula\" string and a \"by\" string");
    fptr f = parse_formula(st["formula"].get<std::string>(), d.preset.signature);
    justification ju = parse_justification(st["by"].get<std::string>());
    if (st.contains("subst")) {
      if (!st["subst"].is_object()) fail(errc::parse, "subst must be an object");
      substitution sub;
      for (const auto& [key, val] : st["subst"].items()) {
        int slot = key == "phi" ? 0 : key == "psi" ? 1 : key == "chi" ? 2 : -1;
        if (slot < 0) fail(errc::parse, "subst keys are phi, psi, chi");
        if (!val.is_string()) fail(errc::parse, "subst values must be formula strings");
        sub.map[slot] = parse_formula(val.get<std::string>(), d.preset.signature);
      }
      ju.sub = sub;
    }
    d.steps.emplace_back(std::move(f), std::move(ju));
  }
  return d;
}

derivation_report check_derivation(const derivation& d) {
  auto bad = [](int step, std::string reason) {
    return derivation_report{false, step, std::move(reason)};
  };
  for (size_t i = 0; i < d.steps.size(); ++i) {
    const int n = (int)i + 1;
    const auto& [f, ju] = d.steps[i];
    switch (ju.k) {
      case justification::kind::premise: {
        if (ju.ref1 < 1 || ju.ref1 > (int)d.premises.size())
          return bad(n, "premise " + std::to_string(ju.ref1) + " does not exist");
        if (!equal(f, d.premises[ju.ref1 - 1]))
          return bad(n, "formula differs from premise " + std::to_string(ju.ref1));
        break;
      }
      case justification::kind::axiom: {
        const auto& ss = d.preset.schemes;
        if (std::find(ss.begin(), ss.end(), ju.scheme) == ss.end())
          return bad(n, std::string(scheme_name(ju.scheme)) + " is not a scheme of " +
                            d.preset.name);
        if (scheme_takes_modal(ju.scheme)) {
          const auto& sig = d.preset.signature;
          if (std::find(sig.begin(), sig.end(), ju.modal) == sig.end())
            return bad(n, "'" + ju.modal + "' is not in the modal signature");
        }
        if (ju.sub) {
          fptr want;
          try {
            want = instantiate(ju.scheme, *ju.sub, ju.modal);
          } catch (const error&) {
            return bad(n, "substitution leaves a metavariable unbound");
          }
          if (!equal(want, f))
            return bad(n, std::string("the given substitution does not produce this "
                                      "formula from ") +
                              scheme_name(ju.scheme));
        } else if (!match_axiom(f, ju.scheme, ju.modal)) {
          return bad(n, std::string("not an instance of ") + scheme_name(ju.scheme));
        }
        break;
      }
      case justification::kind::mp: {
        if (ju.ref1 < 1 || ju.ref1 >= n)
          return bad(n, "MP antecedent reference " + std::to_string(ju.ref1) +
                            " is not an earlier step");
        if (ju.ref2 < 1 || ju.ref2 >= n)
          return bad(n, "MP implication reference " + std::to_string(ju.ref2) +
                            " is not an earlier step");
        const fptr& ant = d.steps[ju.ref1 - 1].first;
        const fptr& imp = d.steps[ju.ref2 - 1].first;
        if (imp->kind != fk::imp)
          return bad(n, "step " + std::to_string(ju.ref2) + " is not an implication");
        if (!equal(imp->lhs, ant))
          return bad(n, "step " + std::to_string(ju.ref2) +
                            " does not have step " + std::to_string(ju.ref1) +
                            " as its antecedent");
        if (!equal(imp->rhs, f))
          return bad(n, "formula is not the consequent of step " + std::to_string(ju.ref2));
        break;
      }
      case justification::kind::nec: {
        if (!d.preset.has_nec)
          return bad(n, d.preset.name + " has no necessitation rule");
        if (ju.ref1 < 1 || ju.ref1 >= n)
          return bad(n, "Nec reference " + std::to_string(ju.ref1) +
                            " is not an earlier step");
        const auto& sig = d.preset.signature;
        if (std::find(sig.begin(), sig.end(), ju.modal) == sig.end())
          return bad(n, "'" + ju.modal + "' is not in the modal signature");
        if (f->kind != fk::modal || f->modal != ju.modal ||
            !equal(f->lhs, d.steps[ju.ref1 - 1].first))
          return bad(n, "formula is not " + ju.modal + " applied to step " +
                            std::to_string(ju.ref1));
        break;
      }
    }
  }
  return {};
}

namespace {

bool algebra_matches_preset(const logic_preset& lp, const finite_algebra& a,
                            std::string& why) {
  class_report c = classify(a);
  auto names_match = [&] {
    auto have = a.modal_name_list();
    auto want = lp.signature;
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    if (have != want) {
      why = "modal names do not match the preset signature";
      return false;
    }
    return true;
  };
  switch (lp.id) {
    case preset_id::gbl:
      if (!c.is_gbl) { why = "not a divisible residuated lattice"; return false; }
      return true;
    case preset_id::bl:
      if (!c.is_bl) { why = "not a BL-algebra"; return false; }
      return true;
    case preset_id::l:
      if (!c.is_mv) { why = "not an MV-algebra"; return false; }
      return true;
    case preset_id::l_i: {
      if (!c.is_mv) { why = "not an MV-algebra"; return false; }
      if (!names_match()) return false;
      for (const auto& [name, mf] : c.modals)
        if (!mf.endo) { why = "modal " + name + " is not an endomorphism"; return false; }
      return true;
    }
    case preset_id::s4l_i:
    case preset_id::s4l:
      if (!c.is_s4mv) { why = "not an S4 modal MV-algebra"; return false; }
      return names_match();
    case preset_id::s4tl:
      if (!c.is_s4tmv) { why = "not a tense MV-algebra"; return false; }
      return true;
  }
  why = "unknown preset";
  return false;
}

}  // namespace

soundness_report soundness_spotcheck(const derivation& d,
                                     const std::vector<const finite_algebra*>& algebras) {
  derivation_report chk = check_derivation(d);
  if (!chk.ok)
    fail(errc::precondition,
         "derivation fails at step " + std::to_string(chk.bad_step) + ": " + chk.reason);
  if (d.steps.empty()) fail(errc::precondition, "empty derivation");
  for (const finite_algebra* a : algebras) {
    std::string why;
    if (!algebra_matches_preset(d.preset, *a, why))
      fail(errc::precondition, a->name + " does not fit " + d.preset.name + ": " + why);
  }
  std::vector<equation> premises;
  for (const auto& p : d.premises) premises.push_back({p, formula::mk_one()});
  equation conclusion{d.steps.back().first, formula::mk_one()};
  soundness_report rep;
  rep.consequence = semantic_consequence(algebras, premises, conclusion);
  rep.holds = rep.consequence.holds;
  return rep;
}

}  // namespace gblx
