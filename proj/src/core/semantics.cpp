#include "core/semantics.hpp"

#include <algorithm>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/posetprod.hpp"

namespace gblx {

idx assignment::value_of(int var) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == var) return vals[i];
  fail(errc::not_found, "unassigned variable p" + std::to_string(var));
}

idx evaluate(const finite_algebra& a, const assignment& h, const fptr& f) {
  if (!f) fail(errc::invalid, "null formula");
  switch (f->kind) {
    case fk::var: {
      idx v = h.value_of(f->var);
      if (v < 0 || v >= a.size())
        fail(errc::invalid, "assigned value out of range for p" + std::to_string(f->var));
      return v;
    }
    case fk::zero: return a.zero;
    case fk::one: return a.one;
    case fk::meet: return a.meet_of(evaluate(a, h, f->lhs), evaluate(a, h, f->rhs));
    case fk::join: return a.join_of(evaluate(a, h, f->lhs), evaluate(a, h, f->rhs));
    case fk::fuse: return a.mult_of(evaluate(a, h, f->lhs), evaluate(a, h, f->rhs));
    case fk::imp: return a.impl_of(evaluate(a, h, f->lhs), evaluate(a, h, f->rhs));
    case fk::modal: {
      const modal_op* m = a.find_modal(f->modal);
      if (!m) fail(errc::not_found, "unknown modal '" + f->modal + "'");
      return m->map[evaluate(a, h, f->lhs)];
    }
  }
  fail(errc::invalid, "corrupt formula node");
}

namespace {

void check_assignment_budget(const finite_algebra& a, size_t nvars) {
  const caps& c = global_caps();
  if ((int)nvars > c.max_vars)
    fail(errc::cap, "equation uses " + std::to_string(nvars) + " variables, cap is " +
                        std::to_string(c.max_vars));
  long total = 1;
  for (size_t i = 0; i < nvars; ++i) {
    total *= a.size();
    if (total > c.max_assignments)
      fail(errc::cap, "assignment sweep over " + a.name + " exceeds the cap of " +
                          std::to_string(c.max_assignments));
  }
}

// Calls fn on every assignment in lexicographic order, smallest variable
// index most significant.  Stops early when fn returns true.
template <typename Fn>
void sweep_assignments(const finite_algebra& a, const std::vector<int>& vars, Fn&& fn) {
  assignment h;
  h.vars = vars;
  h.vals.assign(vars.size(), 0);
  const idx n = a.size();
  for (;;) {
    if (fn(h)) return;
    size_t k = h.vals.size();
    while (k > 0) {
      --k;
      if (++h.vals[k] < n) break;
      h.vals[k] = 0;
      if (k == 0) return;
    }
    if (h.vals.empty()) return;
  }
}

std::vector<int> sorted_vars(std::initializer_list<const fptr*> fs) {
  std::set<int> vs;
  for (const fptr* f : fs) {
    auto s = var_indices(*f);
    vs.insert(s.begin(), s.end());
  }
  return {vs.begin(), vs.end()};
}

}  // namespace

validity_report is_valid(const finite_algebra& a, const equation& eq) {
  if (!eq.lhs || !eq.rhs) fail(errc::invalid, "equation with a missing side");
  std::vector<int> vars = sorted_vars({&eq.lhs, &eq.rhs});
  check_assignment_budget(a, vars.size());
  validity_report rep;
  sweep_assignments(a, vars, [&](const assignment& h) {
    ++rep.assignments_checked;
    if (evaluate(a, h, eq.lhs) != evaluate(a, h, eq.rhs)) {
      rep.valid = false;
      rep.countermodel = h;
      return true;
    }
    return false;
  });
  return rep;
}

consequence_report semantic_consequence(const std::vector<const finite_algebra*>& ks,
                                        const std::vector<equation>& premises,
                                        const equation& conclusion) {
  if (!conclusion.lhs || !conclusion.rhs) fail(errc::invalid, "equation with a missing side");
  std::set<int> vs = var_indices(conclusion.lhs);
  {
    auto more = var_indices(conclusion.rhs);
    vs.insert(more.begin(), more.end());
  }
  for (const auto& p : premises) {
    if (!p.lhs || !p.rhs) fail(errc::invalid, "equation with a missing side");
    for (const fptr* side : {&p.lhs, &p.rhs}) {
      auto more = var_indices(*side);
      vs.insert(more.begin(), more.end());
    }
  }
  std::vector<int> vars(vs.begin(), vs.end());

  consequence_report rep;
  for (size_t ai = 0; ai < ks.size(); ++ai) {
    const finite_algebra& a = *ks[ai];
    check_assignment_budget(a, vars.size());
    sweep_assignments(a, vars, [&](const assignment& h) {
      ++rep.assignments_checked;
      for (const auto& p : premises)
        if (evaluate(a, h, p.lhs) != evaluate(a, h, p.rhs)) return false;
      if (evaluate(a, h, conclusion.lhs) != evaluate(a, h, conclusion.rhs)) {
        rep.holds = false;
        rep.algebra_index = (int)ai;
        rep.witness = h;
        return true;
      }
      return false;
    });
    if (!rep.holds) break;
  }
  return rep;
}

translation_report check_translation_equivalence(const finite_algebra& a, const fptr& f) {
  if (!f) fail(errc::invalid, "null formula");
  if (!is_pure(f)) fail(errc::precondition, "translation input must be modal-free");
  class_report cls = classify(a);

  translation_report rep;
  std::string modal;
  fptr tf;
  if (cls.is_s4tmv) {
    rep.mode = "tense";
    modal = "G";
    tf = translate_t(f);
  } else if (cls.is_s4mv && a.modals.size() == 1) {
    rep.mode = "box";
    modal = a.modals[0].name;
    tf = relabel_modal(translate_m(f), "box", modal);
  } else {
    fail(errc::precondition,
         "algebra must be an S4 modal algebra with a single box or a tense pair");
  }

  interior_image img = conucleus_image(a, modal);
  const table1& g = a.find_modal(modal)->map;

  std::vector<int> vars = sorted_vars({&f});
  check_assignment_budget(a, vars.size());

  std::optional<assignment> pointwise_witness, fixedness_witness;
  sweep_assignments(a, vars, [&](const assignment& h) {
    ++rep.assignments_checked;
    assignment hbar = h;  // composed with the interior, values in the image
    for (auto& v : hbar.vals) v = img.from_parent[g[v]];
    idx lhs = img.to_parent[evaluate(img.algebra, hbar, f)];
    idx rhs = evaluate(a, h, tf);
    if (lhs != rhs && !pointwise_witness) {
      rep.pointwise = false;
      pointwise_witness = h;
    }
    if (g[rhs] != rhs && !fixedness_witness) {
      rep.fixedness = false;
      fixedness_witness = h;
    }
    return !rep.pointwise && !rep.fixedness;
  });

  validity_report in_image = is_valid(img.algebra, {f, formula::mk_one()});
  validity_report in_parent = is_valid(a, {tf, formula::mk_one()});
  rep.assignments_checked += in_image.assignments_checked + in_parent.assignments_checked;
  if (in_image.valid != in_parent.valid) rep.validity = false;

  rep.pass = rep.pointwise && rep.validity && rep.fixedness;
  if (!rep.pointwise) {
    rep.witness = pointwise_witness;
    rep.detail = "image evaluation and translated evaluation differ";
  } else if (!rep.validity) {
    rep.witness = in_image.valid ? in_parent.countermodel : in_image.countermodel;
    rep.detail = in_image.valid ? "translation fails in the parent but the image validates"
                                : "image fails but the translation validates in the parent";
  } else if (!rep.fixedness) {
    rep.witness = fixedness_witness;
    rep.detail = "translated value is not a fixpoint";
  }
  return rep;
}

}  // namespace gblx
