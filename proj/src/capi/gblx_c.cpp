#include <gblx.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/algebra.hpp"
#include "core/config.hpp"
#include "core/error.hpp"
#include "core/filters.hpp"
#include "core/json_io.hpp"
#include "core/parse.hpp"
#include "core/poset.hpp"
#include "core/posetprod.hpp"
#include "core/proofs.hpp"
#include "core/semantics.hpp"
#include "core/suites.hpp"

#define GBLX_API __attribute__((visibility("default")))

using nlohmann::ordered_json;

struct gblx_algebra {
  gblx::finite_algebra a;
};
struct gblx_poset {
  gblx::finite_poset p;
};
struct gblx_formula {
  gblx::fptr f;
};

namespace {

thread_local std::string t_error;

template <typename F>
gblx_status wrap(F&& fn) {
  try {
    fn();
    return GBLX_OK;
  } catch (const gblx::error& e) {
    t_error = e.what();
    return (gblx_status)(int)e.code;
  } catch (const std::exception& e) {
    t_error = e.what();
    return GBLX_E_INVALID;
  }
}

void need(const void* p, const char* what) {
  if (!p) gblx::fail(gblx::errc::invalid, std::string("null argument: ") + what);
}

char* dup_string(const std::string& s) {
  char* p = (char*)std::malloc(s.size() + 1);
  if (!p) gblx::fail(gblx::errc::invalid, "out of memory");
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(char** out, const ordered_json& j) { *out = dup_string(j.dump(2)); }

// comma-separated carrier names; commas inside parentheses do not split
std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  auto push = [&] {
    size_t b = cur.find_first_not_of(" \t");
    if (b == std::string::npos) {
      cur.clear();
      return;
    }
    size_t e = cur.find_last_not_of(" \t");
    out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      push();
      continue;
    }
    cur += c;
  }
  push();
  return out;
}

std::vector<gblx::idx> parse_elements(const gblx::finite_algebra& a, const char* csv,
                                      const char* what) {
  need(csv, what);
  std::vector<gblx::idx> out;
  for (const std::string& name : split_names(csv)) out.push_back(a.element(name));
  return out;
}

ordered_json names_of(const gblx::finite_algebra& a, const std::vector<gblx::idx>& xs) {
  ordered_json j = ordered_json::array();
  for (gblx::idx x : xs) j.push_back(a.carrier[x]);
  return j;
}

ordered_json subset_names(const gblx::finite_algebra& a, const gblx::subset& s) {
  ordered_json j = ordered_json::array();
  for (gblx::idx x = 0; x < a.size(); ++x)
    if (s[x]) j.push_back(a.carrier[x]);
  return j;
}

ordered_json blocks_of(const gblx::finite_algebra& a, const gblx::partition& th) {
  int nblocks = 0;
  for (int b : th) nblocks = std::max(nblocks, b + 1);
  std::vector<ordered_json> blocks(nblocks, ordered_json::array());
  for (gblx::idx x = 0; x < (gblx::idx)th.size(); ++x)
    blocks[th[x]].push_back(a.carrier[x]);
  ordered_json j = ordered_json::array();
  for (auto& b : blocks) j.push_back(std::move(b));
  return j;
}

ordered_json law_json(const gblx::finite_algebra& a, const gblx::law_failure& l) {
  ordered_json j;
  j["law"] = l.law;
  j["witness"] = names_of(a, l.witness);
  return j;
}

ordered_json assignment_json(const gblx::finite_algebra& a, const gblx::assignment& h) {
  ordered_json j = ordered_json::object();
  for (size_t i = 0; i < h.vars.size(); ++i)
    j["p" + std::to_string(h.vars[i])] = a.carrier[h.vals[i]];
  return j;
}

std::vector<const gblx::finite_algebra*> unwrap(const gblx_algebra* const* xs, int count,
                                                const char* what) {
  need(xs, what);
  if (count < 1) gblx::fail(gblx::errc::invalid, std::string(what) + ": need at least one");
  std::vector<const gblx::finite_algebra*> out;
  for (int i = 0; i < count; ++i) {
    need(xs[i], what);
    out.push_back(&xs[i]->a);
  }
  return out;
}

}  // namespace

extern "C" {

GBLX_API const char* gblx_version(void) { return "0.1.0"; }

GBLX_API const char* gblx_last_error(void) { return t_error.c_str(); }

GBLX_API void gblx_string_free(char* s) { std::free(s); }

GBLX_API gblx_status gblx_cap_set(const char* name, long value) {
  return wrap([&] {
    need(name, "name");
    if (value <= 0) gblx::fail(gblx::errc::invalid, "cap values must be positive");
    gblx::caps& c = gblx::global_caps();
    std::string n = name;
    if (n == "vars") c.max_vars = (int)value;
    else if (n == "assignments") c.max_assignments = value;
    else if (n == "poset") c.max_poset = (int)value;
    else if (n == "product") c.max_product = value;
    else if (n == "lddt-product-len") c.lddt_product_len = (int)value;
    else if (n == "lddt-block-len") c.lddt_block_len = (int)value;
    else gblx::fail(gblx::errc::not_found, "unknown cap '" + n + "'");
  });
}

GBLX_API gblx_status gblx_cap_get(const char* name, long* value) {
  return wrap([&] {
    need(name, "name");
    need(value, "value");
    const gblx::caps& c = gblx::global_caps();
    std::string n = name;
    if (n == "vars") *value = c.max_vars;
    else if (n == "assignments") *value = c.max_assignments;
    else if (n == "poset") *value = c.max_poset;
    else if (n == "product") *value = c.max_product;
    else if (n == "lddt-product-len") *value = c.lddt_product_len;
    else if (n == "lddt-block-len") *value = c.lddt_block_len;
    else gblx::fail(gblx::errc::not_found, "unknown cap '" + n + "'");
  });
}

/* ------------------------------------------------------------ algebras */

GBLX_API gblx_status gblx_algebra_from_json(const char* json, gblx_algebra** out) {
  return wrap([&] {
    need(json, "json");
    need(out, "out");
    *out = new gblx_algebra{gblx::algebra_from_json(json)};
  });
}

GBLX_API gblx_status gblx_algebra_to_json(const gblx_algebra* a, char** out) {
  return wrap([&] {
    need(a, "algebra");
    need(out, "out");
    *out = dup_string(gblx::algebra_to_json(a->a));
  });
}

GBLX_API void gblx_algebra_free(gblx_algebra* a) { delete a; }

GBLX_API gblx_status gblx_lukasiewicz(int n, gblx_algebra** out) {
  return wrap([&] {
    need(out, "out");
    *out = new gblx_algebra{gblx::lukasiewicz_chain(n)};
  });
}

GBLX_API gblx_status gblx_with_identity_modal(const gblx_algebra* a, const char* modal,
                                              gblx_algebra** out) {
  return wrap([&] {
    need(a, "algebra");
    need(modal, "modal");
    need(out, "out");
    *out = new gblx_algebra{gblx::with_identity_modal(a->a, modal)};
  });
}

GBLX_API gblx_status gblx_direct_product(const gblx_algebra* const* factors, int count,
                                         gblx_algebra** out) {
  return wrap([&] {
    need(out, "out");
    auto fs = unwrap(factors, count, "factors");
    std::vector<gblx::finite_algebra> copies;
    for (auto* f : fs) copies.push_back(*f);
    *out = new gblx_algebra{gblx::direct_product(copies)};
  });
}

GBLX_API int gblx_algebra_size(const gblx_algebra* a) { return a ? a->a.size() : -1; }

GBLX_API gblx_status gblx_algebra_check_json(const gblx_algebra* a, char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(report, "report");
    gblx::class_report c = gblx::classify(a->a);
    ordered_json j;
    j["pass"] = c.is_rl;
    j["flags"] = {{"RL", c.is_rl},     {"GBL", c.is_gbl},     {"BL", c.is_bl},
                  {"MV", c.is_mv},     {"S4MV", c.is_s4mv},   {"S4tMV", c.is_s4tmv}};
    ordered_json ms = ordered_json::array();
    for (const auto& [name, flags] : c.modals) {
      ordered_json m;
      m["name"] = name;
      m["endomorphism"] = flags.endo;
      m["interior"] = flags.interior;
      if (flags.fail) m["failure"] = law_json(a->a, *flags.fail);
      ms.push_back(std::move(m));
    }
    j["modals"] = std::move(ms);
    if (c.first_counterexample) j["first_failure"] = law_json(a->a, *c.first_counterexample);
    emit(report, j);
  });
}

/* ------------------------------------------------------------- posets */

GBLX_API gblx_status gblx_poset_from_json(const char* json, gblx_poset** out) {
  return wrap([&] {
    need(json, "json");
    need(out, "out");
    *out = new gblx_poset{gblx::poset_from_json(json)};
  });
}

GBLX_API gblx_status gblx_poset_to_json(const gblx_poset* p, char** out) {
  return wrap([&] {
    need(p, "poset");
    need(out, "out");
    *out = dup_string(gblx::poset_to_json(p->p));
  });
}

GBLX_API void gblx_poset_free(gblx_poset* p) { delete p; }

GBLX_API int gblx_poset_size(const gblx_poset* p) { return p ? p->p.size() : -1; }

GBLX_API gblx_status gblx_poset_product(const gblx_poset* p,
                                        const gblx_algebra* const* factors, int count,
                                        int tense, gblx_algebra** out, char** sidecar) {
  return wrap([&] {
    need(p, "poset");
    need(out, "out");
    auto fs = unwrap(factors, count, "factors");
    if (count != p->p.size())
      gblx::fail(gblx::errc::invalid, "need exactly one factor per poset element, got " +
                                          std::to_string(count) + " for " +
                                          std::to_string(p->p.size()));
    std::vector<gblx::finite_algebra> copies;
    for (auto* f : fs) copies.push_back(*f);
    gblx::labeled_product lp = gblx::labeled_product::build(p->p, std::move(copies));
    gblx::finite_algebra prod = gblx::modal_product(lp, tense != 0);
    if (sidecar) {
      ordered_json j;
      j["poset"] = lp.poset.elements;
      ordered_json elems = ordered_json::array();
      for (gblx::idx i = 0; i < lp.prod.size(); ++i) {
        ordered_json e;
        e["index"] = i;
        ordered_json tup = ordered_json::array();
        for (size_t k = 0; k < lp.tuples[i].size(); ++k)
          tup.push_back(lp.factors[k].carrier[lp.tuples[i][k]]);
        e["tuple"] = std::move(tup);
        elems.push_back(std::move(e));
      }
      j["elements"] = std::move(elems);
      ordered_json ac = ordered_json::array();
      for (gblx::idx i = 0; i < lp.prod.size(); ++i)
        if (lp.ac_labeling(i)) ac.push_back(lp.prod.carrier[i]);
      j["ac_labelings"] = std::move(ac);
      emit(sidecar, j);
    }
    *out = new gblx_algebra{std::move(prod)};
  });
}

GBLX_API gblx_status gblx_conucleus_check_json(const gblx_algebra* a, const char* modal,
                                               char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(modal, "modal");
    need(report, "report");
    gblx::rl_report r = gblx::check_conucleus(a->a, modal);
    ordered_json j;
    j["pass"] = r.pass;
    if (r.first) j["first_failure"] = law_json(a->a, *r.first);
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_conucleus_image(const gblx_algebra* a, const char* modal,
                                          gblx_algebra** out, char** map) {
  return wrap([&] {
    need(a, "algebra");
    need(modal, "modal");
    need(out, "out");
    gblx::interior_image img = gblx::conucleus_image(a->a, modal);
    if (map) {
      ordered_json j;
      j["fixpoints"] = names_of(a->a, img.to_parent);
      emit(map, j);
    }
    *out = new gblx_algebra{std::move(img.algebra)};
  });
}

/* ----------------------------------------------------------- formulas */

GBLX_API gblx_status gblx_formula_parse(const char* text, const char* const* modal_names,
                                        int count, gblx_formula** out) {
  return wrap([&] {
    need(text, "text");
    need(out, "out");
    std::vector<std::string> sig;
    for (int i = 0; i < count; ++i) {
      need(modal_names, "modal_names");
      need(modal_names[i], "modal_names");
      sig.push_back(modal_names[i]);
    }
    *out = new gblx_formula{gblx::parse_formula(text, sig)};
  });
}

GBLX_API gblx_status gblx_formula_print(const gblx_formula* f, char** out) {
  return wrap([&] {
    need(f, "formula");
    need(out, "out");
    *out = dup_string(gblx::print(f->f));
  });
}

GBLX_API int gblx_formula_height(const gblx_formula* f) {
  return f ? gblx::height(f->f) : -1;
}

GBLX_API void gblx_formula_free(gblx_formula* f) { delete f; }

GBLX_API gblx_status gblx_translate(const gblx_formula* f, const char* mode,
                                    gblx_formula** out) {
  return wrap([&] {
    need(f, "formula");
    need(mode, "mode");
    need(out, "out");
    std::string m = mode;
    if (m == "M")
      *out = new gblx_formula{gblx::translate_m(f->f)};
    else if (m == "T")
      *out = new gblx_formula{gblx::translate_t(f->f)};
    else
      gblx::fail(gblx::errc::invalid, "mode must be M or T, got '" + m + "'");
  });
}

/* ---------------------------------------------------------- semantics */

GBLX_API gblx_status gblx_validate_json(const gblx_algebra* a, const char* equation,
                                        char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(equation, "equation");
    need(report, "report");
    auto [lhs, rhs] = gblx::parse_equation(equation, a->a.modal_name_list());
    gblx::validity_report r = gblx::is_valid(a->a, {lhs, rhs});
    ordered_json j;
    j["pass"] = r.valid;
    j["assignments_checked"] = r.assignments_checked;
    if (r.countermodel) j["countermodel"] = assignment_json(a->a, *r.countermodel);
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_consequence_json(const gblx_algebra* const* algebras, int count,
                                           const char* const* premises, int n_premises,
                                           const char* conclusion, char** report) {
  return wrap([&] {
    need(conclusion, "conclusion");
    need(report, "report");
    auto ks = unwrap(algebras, count, "algebras");
    std::vector<std::string> sig;
    for (auto* a : ks)
      for (const std::string& m : a->modal_name_list())
        if (std::find(sig.begin(), sig.end(), m) == sig.end()) sig.push_back(m);
    std::vector<gblx::equation> prem;
    for (int i = 0; i < n_premises; ++i) {
      need(premises, "premises");
      need(premises[i], "premises");
      auto [l, r] = gblx::parse_equation(premises[i], sig);
      prem.push_back({l, r});
    }
    auto [cl, cr] = gblx::parse_equation(conclusion, sig);
    gblx::consequence_report r = gblx::semantic_consequence(ks, prem, {cl, cr});
    ordered_json j;
    j["pass"] = r.holds;
    j["assignments_checked"] = r.assignments_checked;
    if (!r.holds) {
      j["algebra"] = ks[r.algebra_index]->name;
      if (r.witness) j["witness"] = assignment_json(*ks[r.algebra_index], *r.witness);
    }
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_translation_check_json(const gblx_algebra* a,
                                                 const gblx_formula* f, char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(f, "formula");
    need(report, "report");
    gblx::translation_report r = gblx::check_translation_equivalence(a->a, f->f);
    ordered_json j;
    j["pass"] = r.pass;
    j["mode"] = r.mode;
    j["pointwise"] = r.pointwise;
    j["validity"] = r.validity;
    j["fixedness"] = r.fixedness;
    j["assignments_checked"] = r.assignments_checked;
    if (r.witness) j["witness"] = assignment_json(a->a, *r.witness);
    if (!r.detail.empty()) j["detail"] = r.detail;
    emit(report, j);
  });
}

/* ------------------------------------------------------------ filters */

GBLX_API gblx_status gblx_filter_check_json(const gblx_algebra* a, const char* elements,
                                            char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(report, "report");
    gblx::subset s(a->a.size(), 0);
    for (gblx::idx x : parse_elements(a->a, elements, "elements")) s[x] = 1;
    auto viol = gblx::ifilter_violation(a->a, s);
    ordered_json j;
    j["pass"] = !viol.has_value();
    if (viol) j["first_failure"] = law_json(a->a, *viol);
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_filter_generate_json(const gblx_algebra* a,
                                               const char* generators, char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(report, "report");
    gblx::subset f =
        gblx::generate_filter(a->a, parse_elements(a->a, generators, "generators"));
    ordered_json j;
    j["filter"] = subset_names(a->a, f);
    j["size"] = (int)j["filter"].size();
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_filters_enumerate_json(const gblx_algebra* a, char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(report, "report");
    std::vector<gblx::subset> fs = gblx::enumerate_ifilters(a->a);
    ordered_json j;
    j["count"] = fs.size();
    ordered_json list = ordered_json::array();
    for (const auto& f : fs) list.push_back(subset_names(a->a, f));
    j["filters"] = std::move(list);
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_congruences_enumerate_json(const gblx_algebra* a, char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(report, "report");
    std::vector<gblx::partition> cs = gblx::enumerate_congruences(a->a);
    ordered_json j;
    j["count"] = cs.size();
    ordered_json list = ordered_json::array();
    for (const auto& th : cs) list.push_back(blocks_of(a->a, th));
    j["congruences"] = std::move(list);
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_filter_to_congruence_json(const gblx_algebra* a,
                                                    const char* elements, char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(report, "report");
    gblx::subset s(a->a.size(), 0);
    for (gblx::idx x : parse_elements(a->a, elements, "elements")) s[x] = 1;
    gblx::partition th = gblx::filter_to_congruence(a->a, s);
    ordered_json j;
    j["blocks"] = blocks_of(a->a, th);
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_principal_congruence_json(const gblx_algebra* a, const char* x,
                                                    const char* y, char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(x, "x");
    need(y, "y");
    need(report, "report");
    gblx::partition th = gblx::principal_congruence(a->a, a->a.element(x), a->a.element(y));
    ordered_json j;
    j["blocks"] = blocks_of(a->a, th);
    j["filter"] = subset_names(a->a, gblx::congruence_to_filter(a->a, th));
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_cep_check_json(const gblx_algebra* sub, const gblx_algebra* ambient,
                                         const char* embedding, char** report) {
  return wrap([&] {
    need(sub, "sub");
    need(ambient, "ambient");
    need(report, "report");
    std::vector<gblx::idx> map = parse_elements(ambient->a, embedding, "embedding");
    gblx::cep_report r = gblx::check_cep(sub->a, ambient->a, map);
    ordered_json j;
    j["pass"] = r.pass;
    j["filters_checked"] = r.filters_checked;
    if (r.witness) {
      j["witness"] = {{"filter", subset_names(sub->a, r.witness->first)},
                      {"element", sub->a.carrier[r.witness->second]}};
    }
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_lddt_json(const gblx_algebra* a, const char* gamma,
                                    const char* delta, const char* psi, int single_box,
                                    char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(psi, "psi");
    need(report, "report");
    gblx::lddt_query q;
    q.gamma = parse_elements(a->a, gamma, "gamma");
    q.delta = parse_elements(a->a, delta, "delta");
    q.psi = a->a.element(psi);
    gblx::lddt_report r = gblx::lddt_witness(a->a, q, single_box != 0);
    ordered_json j;
    j["status"] = r.status == gblx::lddt_status::witness      ? "witness"
                  : r.status == gblx::lddt_status::no_witness ? "no-witness"
                                                              : "inconclusive";
    j["member"] = r.member;
    if (r.status == gblx::lddt_status::witness) {
      ordered_json fs = ordered_json::array();
      for (const auto& fac : r.factors) {
        ordered_json ff;
        ordered_json block = ordered_json::array();
        for (int m : fac.block) block.push_back(a->a.modals[m].name);
        ff["block"] = std::move(block);
        ff["element"] = a->a.carrier[fac.element];
        fs.push_back(std::move(ff));
      }
      j["factors"] = std::move(fs);
      j["implication"] = a->a.carrier[r.implication];
    }
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_lambda_json(const gblx_algebra* a, const char* x, int m,
                                      char** report) {
  return wrap([&] {
    need(a, "algebra");
    need(x, "x");
    need(report, "report");
    if (m < 0) gblx::fail(gblx::errc::invalid, "power must be >= 0");
    gblx::idx e = a->a.element(x);
    ordered_json j;
    j["element"] = a->a.carrier[e];
    j["power"] = m;
    j["result"] = a->a.carrier[gblx::lambda_power(a->a, e, m)];
    emit(report, j);
  });
}

/* ------------------------------------------------------------- proofs */

GBLX_API gblx_status gblx_proof_check_json(const char* derivation, char** report) {
  return wrap([&] {
    need(derivation, "derivation");
    need(report, "report");
    gblx::derivation d = gblx::derivation_from_json(derivation);
    gblx::derivation_report r = gblx::check_derivation(d);
    ordered_json j;
    j["ok"] = r.ok;
    j["logic"] = d.preset.name;
    j["steps"] = d.steps.size();
    if (!r.ok) {
      j["bad_step"] = r.bad_step;
      j["reason"] = r.reason;
    }
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_proof_soundness_json(const char* derivation,
                                               const gblx_algebra* const* algebras,
                                               int count, char** report) {
  return wrap([&] {
    need(derivation, "derivation");
    need(report, "report");
    auto ks = unwrap(algebras, count, "algebras");
    gblx::derivation d = gblx::derivation_from_json(derivation);
    gblx::soundness_report r = gblx::soundness_spotcheck(d, ks);
    ordered_json j;
    j["pass"] = r.holds;
    j["algebras"] = count;
    j["assignments_checked"] = r.consequence.assignments_checked;
    if (!r.holds) {
      j["algebra"] = ks[r.consequence.algebra_index]->name;
      if (r.consequence.witness)
        j["witness"] =
            assignment_json(*ks[r.consequence.algebra_index], *r.consequence.witness);
    }
    emit(report, j);
  });
}

/* ------------------------------------------------------------- suites */

GBLX_API gblx_status gblx_suite_names_json(char** report) {
  return wrap([&] {
    need(report, "report");
    ordered_json j;
    j["suites"] = gblx::suite_names();
    emit(report, j);
  });
}

GBLX_API gblx_status gblx_suite_run_json(const char* name, unsigned long long seed,
                                         const char* filter, char** report) {
  return wrap([&] {
    need(name, "name");
    need(report, "report");
    gblx::suite_report r = gblx::run_suite(name, seed, filter ? filter : "");
    ordered_json j;
    j["name"] = r.name;
    j["seed"] = r.seed;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    j["elapsed_ms"] = r.elapsed_ms;
    emit(report, j);
  });
}

}  // extern "C"
