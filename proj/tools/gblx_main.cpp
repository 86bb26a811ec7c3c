// gblx command-line front end.  Talks to the library exclusively through
// the C interface; all report payloads arrive as JSON strings and are
// either passed through or re-rendered for --human.
//
// Exit codes: 0 = check passed or construction succeeded, 1 = a check ran
// and failed (the report carries the witness), 2 = usage or input error.

#include <gblx.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

struct cli_exit {
  int code;
};

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  throw cli_exit{2};
}

void check(gblx_status st) {
  if (st != GBLX_OK) die(gblx_last_error());
}

// RAII over the C handles and strings

struct owned_str {
  char* p = nullptr;
  ~owned_str() { gblx_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct owned_algebra {
  gblx_algebra* p = nullptr;
  owned_algebra() = default;
  owned_algebra(owned_algebra&& o) : p(o.p) { o.p = nullptr; }
  owned_algebra& operator=(owned_algebra&& o) {
    std::swap(p, o.p);
    return *this;
  }
  owned_algebra(const owned_algebra&) = delete;
  ~owned_algebra() { gblx_algebra_free(p); }
};

struct owned_poset {
  gblx_poset* p = nullptr;
  ~owned_poset() { gblx_poset_free(p); }
};

struct owned_formula {
  gblx_formula* p = nullptr;
  ~owned_formula() { gblx_formula_free(p); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

owned_algebra load_algebra(const std::string& path) {
  owned_algebra a;
  check(gblx_algebra_from_json(read_file(path).c_str(), &a.p));
  return a;
}

// ------------------------------------------------------------ rendering

bool scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

std::string inline_str(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (size_t i = 0; i < j.size(); ++i) {
      if (i) s += ", ";
      s += inline_str(j[i]);
    }
    return s + "]";
  }
  return j.dump();
}

void render_human(const json& j, int depth) {
  std::string pad(2 * (size_t)depth, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !scalar_array(v))) {
        std::cout << pad << k << ":\n";
        render_human(v, depth + 1);
      } else {
        std::cout << pad << k << ": " << inline_str(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        std::cout << pad << "-\n";
        render_human(v, depth + 1);
      } else {
        std::cout << pad << "- " << inline_str(v) << "\n";
      }
    }
  } else {
    std::cout << pad << inline_str(j) << "\n";
  }
}

bool g_human = false;

void print_report(const std::string& text) {
  if (!g_human) {
    std::cout << text << "\n";
    return;
  }
  render_human(json::parse(text), 0);
}

void print_json(const json& j) {
  if (g_human)
    render_human(j, 0);
  else
    std::cout << j.dump(2) << "\n";
}

// 0 when the report's boolean `key` is true, 1 otherwise
int verdict(const std::string& text, const char* key) {
  json j = json::parse(text);
  return j.value(key, false) ? 0 : 1;
}

void emit_algebra(const owned_algebra& a, const std::string& out_path) {
  owned_str s;
  check(gblx_algebra_to_json(a.p, &s.p));
  if (out_path.empty())
    std::cout << s.str() << "\n";
  else
    write_file(out_path, s.str());
}

std::string sidecar_default(const std::string& out) {
  std::string stem = out;
  const std::string ext = ".json";
  if (stem.size() > ext.size() && stem.rfind(ext) == stem.size() - ext.size())
    stem.resize(stem.size() - ext.size());
  return stem + ".sidecar.json";
}

void apply_cap_arg(const std::string& spec) {
  size_t eq = spec.find('=');
  if (eq == std::string::npos) die("--cap wants NAME=VALUE, got '" + spec + "'");
  char* end = nullptr;
  long v = std::strtol(spec.c_str() + eq + 1, &end, 10);
  if (!end || *end) die("--cap value in '" + spec + "' is not an integer");
  check(gblx_cap_set(spec.substr(0, eq).c_str(), v));
}

std::vector<std::string> split_two(const std::string& text) {
  // one top-level comma; parenthesized names keep their own commas
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra workbench for modal and tense translations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(gblx_version()); });
  unsigned long long seed = 0;
  std::vector<std::string> cap_args;
  app.add_flag("--human", g_human, "plain-text rendering instead of JSON");
  app.add_option("--seed", seed, "seed for the random formula pool")->capture_default_str();
  app.add_option("--cap", cap_args,
                 "override a resource cap, NAME=VALUE (vars, assignments, poset, "
                 "product, lddt-product-len, lddt-block-len)");

  int rc = 0;
  // work is dispatched after parsing so that --cap and the environment
  // apply before any subcommand runs
  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;
  auto on = [&actions](CLI::App* sub, std::function<void()> fn) {
    sub->fallthrough();
    actions.emplace_back(sub, std::move(fn));
  };

  // algebra-check
  std::string ac_file;
  auto* ac = app.add_subcommand("algebra-check",
                                "residuated-lattice laws and class flags for one algebra");
  ac->add_option("file", ac_file, "algebra JSON file")->required();
  on(ac, [&] {
    owned_algebra a = load_algebra(ac_file);
    owned_str rep;
    check(gblx_algebra_check_json(a.p, &rep.p));
    print_report(rep.str());
    rc = verdict(rep.str(), "pass");
  });

  // algebra-make
  int am_n = 0;
  std::vector<std::string> am_modals;
  std::string am_out;
  auto* am = app.add_subcommand("algebra-make", "build a standard algebra file");
  am->add_option("--lukasiewicz", am_n, "n-element standard chain, n >= 2")->required();
  am->add_option("--modal", am_modals, "attach an identity modal with this name (repeatable)");
  am->add_option("-o,--out", am_out, "output file (default stdout)");
  on(am, [&] {
    owned_algebra a;
    check(gblx_lukasiewicz(am_n, &a.p));
    for (const std::string& m : am_modals) {
      owned_algebra next;
      check(gblx_with_identity_modal(a.p, m.c_str(), &next.p));
      a = std::move(next);
    }
    emit_algebra(a, am_out);
  });

  // product
  std::vector<std::string> pr_files;
  std::string pr_out;
  auto* pr = app.add_subcommand("product", "direct product of algebras");
  pr->add_option("files", pr_files, "factor algebra files")->required();
  pr->add_option("-o,--out", pr_out, "output file (default stdout)");
  on(pr, [&] {
    std::vector<owned_algebra> fs;
    for (const auto& f : pr_files) fs.push_back(load_algebra(f));
    std::vector<const gblx_algebra*> ptrs;
    for (const auto& f : fs) ptrs.push_back(f.p);
    owned_algebra out;
    check(gblx_direct_product(ptrs.data(), (int)ptrs.size(), &out.p));
    emit_algebra(out, pr_out);
  });

  // poset-product
  std::string pp_poset, pp_out, pp_sidecar;
  std::vector<std::string> pp_files;
  bool pp_tense = false;
  auto* pp = app.add_subcommand(
      "poset-product", "poset product with the interior modal(s) attached");
  pp->add_option("--poset", pp_poset, "poset JSON file")->required();
  pp->add_option("factors", pp_files,
                 "factor files, one per poset element, or one file for all")
      ->required();
  pp->add_flag("--tense", pp_tense, "attach the G, H pair instead of box");
  pp->add_option("-o,--out", pp_out, "output file (default stdout)");
  pp->add_option("--sidecar", pp_sidecar,
                 "tuple map file (default <out>.sidecar.json when -o is used)");
  on(pp, [&] {
    owned_poset p;
    check(gblx_poset_from_json(read_file(pp_poset).c_str(), &p.p));
    std::vector<owned_algebra> fs;
    for (const auto& f : pp_files) fs.push_back(load_algebra(f));
    int n = gblx_poset_size(p.p);
    std::vector<const gblx_algebra*> ptrs;
    if ((int)fs.size() == 1 && n > 1)
      ptrs.assign((size_t)n, fs[0].p);
    else
      for (const auto& f : fs) ptrs.push_back(f.p);
    owned_algebra out;
    owned_str side;
    check(gblx_poset_product(p.p, ptrs.data(), (int)ptrs.size(), pp_tense ? 1 : 0,
                             &out.p, &side.p));
    emit_algebra(out, pp_out);
    std::string side_path = pp_sidecar;
    if (side_path.empty() && !pp_out.empty()) side_path = sidecar_default(pp_out);
    if (!side_path.empty()) write_file(side_path, side.str());
  });

  // conucleus-image
  std::string ci_file, ci_modal, ci_out, ci_map;
  auto* ci = app.add_subcommand("conucleus-image",
                                "fixpoint algebra of an interior modal");
  ci->add_option("file", ci_file, "algebra JSON file")->required();
  ci->add_option("--modal", ci_modal, "modal name")->required();
  ci->add_option("-o,--out", ci_out, "output file (default stdout)");
  ci->add_option("--map", ci_map, "write the fixpoint list to this file");
  on(ci, [&] {
    owned_algebra a = load_algebra(ci_file);
    owned_str chk;
    check(gblx_conucleus_check_json(a.p, ci_modal.c_str(), &chk.p));
    if (verdict(chk.str(), "pass") != 0) {
      print_report(chk.str());
      rc = 1;
      return;
    }
    owned_algebra img;
    owned_str map;
    check(gblx_conucleus_image(a.p, ci_modal.c_str(), &img.p, &map.p));
    emit_algebra(img, ci_out);
    if (!ci_map.empty()) write_file(ci_map, map.str());
  });

  // translate
  std::string tr_mode, tr_formula;
  auto* tr = app.add_subcommand("translate", "interior translation of a pure formula");
  tr->add_option("--mode", tr_mode, "M (box fragment) or T (tense fragment)")->required();
  tr->add_option("formula", tr_formula, "pure formula text")->required();
  on(tr, [&] {
    owned_formula f;
    check(gblx_formula_parse(tr_formula.c_str(), nullptr, 0, &f.p));
    owned_formula out;
    check(gblx_translate(f.p, tr_mode.c_str(), &out.p));
    owned_str s;
    check(gblx_formula_print(out.p, &s.p));
    std::cout << s.str() << "\n";
  });

  // validate
  std::string va_file, va_eq;
  auto* va = app.add_subcommand("validate", "equation validity on one algebra");
  va->add_option("file", va_file, "algebra JSON file")->required();
  va->add_option("equation", va_eq, "\"<formula> = <formula>\"")->required();
  on(va, [&] {
    owned_algebra a = load_algebra(va_file);
    owned_str rep;
    check(gblx_validate_json(a.p, va_eq.c_str(), &rep.p));
    print_report(rep.str());
    rc = verdict(rep.str(), "pass");
  });

  // consequence
  std::string cq_job;
  auto* cq = app.add_subcommand(
      "consequence", "finite-class semantic consequence from a job file");
  cq->add_option("job", cq_job,
                 "JSON job: {algebras: [paths], premises: [equations], "
                 "conclusion: equation}")
      ->required();
  on(cq, [&] {
    json job;
    try {
      job = json::parse(read_file(cq_job));
    } catch (const json::exception& e) {
      die(std::string("job file: ") + e.what());
    }
    if (!job.is_object() || !job.contains("algebras") || !job.contains("conclusion"))
      die("job file needs algebras and conclusion");
    std::filesystem::path base = std::filesystem::path(cq_job).parent_path();
    std::vector<owned_algebra> algs;
    for (const auto& p : job["algebras"]) {
      if (!p.is_string()) die("algebras must be file paths");
      std::filesystem::path fp = p.get<std::string>();
      if (!fp.is_absolute()) fp = base / fp;
      algs.push_back(load_algebra(fp.string()));
    }
    std::vector<const gblx_algebra*> ptrs;
    for (const auto& a : algs) ptrs.push_back(a.p);
    std::vector<std::string> prem_text;
    if (job.contains("premises"))
      for (const auto& s : job["premises"]) {
        if (!s.is_string()) die("premises must be equation strings");
        prem_text.push_back(s.get<std::string>());
      }
    std::vector<const char*> prem;
    for (const auto& s : prem_text) prem.push_back(s.c_str());
    if (!job["conclusion"].is_string()) die("conclusion must be an equation string");
    std::string concl = job["conclusion"].get<std::string>();
    owned_str rep;
    check(gblx_consequence_json(ptrs.data(), (int)ptrs.size(), prem.data(),
                                (int)prem.size(), concl.c_str(), &rep.p));
    print_report(rep.str());
    rc = verdict(rep.str(), "pass");
  });

  // filters
  std::string fi_file, fi_check, fi_gen, fi_tocon;
  auto* fi = app.add_subcommand("filters", "modal filters of one algebra");
  fi->add_option("file", fi_file, "algebra JSON file")->required();
  auto* fi_c = fi->add_option("--check", fi_check, "test one subset (carrier names)");
  auto* fi_g = fi->add_option("--generate", fi_gen, "least filter containing the names");
  auto* fi_t =
      fi->add_option("--to-congruence", fi_tocon, "partition induced by this filter");
  fi_c->excludes(fi_g)->excludes(fi_t);
  fi_g->excludes(fi_t);
  on(fi, [&] {
    owned_algebra a = load_algebra(fi_file);
    owned_str rep;
    if (fi_c->count()) {
      check(gblx_filter_check_json(a.p, fi_check.c_str(), &rep.p));
      print_report(rep.str());
      rc = verdict(rep.str(), "pass");
    } else if (fi_g->count()) {
      check(gblx_filter_generate_json(a.p, fi_gen.c_str(), &rep.p));
      print_report(rep.str());
    } else if (fi_t->count()) {
      check(gblx_filter_to_congruence_json(a.p, fi_tocon.c_str(), &rep.p));
      print_report(rep.str());
    } else {
      check(gblx_filters_enumerate_json(a.p, &rep.p));
      print_report(rep.str());
    }
  });

  // congruences
  std::string cg_file, cg_principal;
  auto* cg = app.add_subcommand("congruences", "congruences of one algebra");
  cg->add_option("file", cg_file, "algebra JSON file")->required();
  cg->add_option("--principal", cg_principal,
                 "least congruence merging X,Y (two carrier names)");
  on(cg, [&] {
    owned_algebra a = load_algebra(cg_file);
    owned_str rep;
    if (!cg_principal.empty()) {
      auto parts = split_two(cg_principal);
      if (parts.size() != 2) die("--principal wants exactly two carrier names");
      check(gblx_principal_congruence_json(a.p, parts[0].c_str(), parts[1].c_str(),
                                           &rep.p));
      print_report(rep.str());
    } else {
      check(gblx_congruences_enumerate_json(a.p, &rep.p));
      print_report(rep.str());
    }
  });

  // cep
  std::string ce_sub, ce_amb, ce_map;
  auto* ce = app.add_subcommand("cep", "congruence extension along an embedding");
  ce->add_option("--sub", ce_sub, "subalgebra JSON file")->required();
  ce->add_option("--ambient", ce_amb, "ambient algebra JSON file")->required();
  ce->add_option("--map", ce_map,
                 "ambient carrier names, one per subalgebra element, in order")
      ->required();
  on(ce, [&] {
    owned_algebra s = load_algebra(ce_sub);
    owned_algebra b = load_algebra(ce_amb);
    owned_str rep;
    check(gblx_cep_check_json(s.p, b.p, ce_map.c_str(), &rep.p));
    print_report(rep.str());
    rc = verdict(rep.str(), "pass");
  });

  // lddt
  std::string ld_file, ld_gamma, ld_delta, ld_psi, ld_preset = "auto";
  auto* ld = app.add_subcommand("lddt", "deduction witness search");
  ld->add_option("file", ld_file, "algebra JSON file")->required();
  ld->add_option("--gamma", ld_gamma, "premise elements (carrier names)");
  ld->add_option("--delta", ld_delta, "detachable elements (carrier names)");
  ld->add_option("--psi", ld_psi, "target element")->required();
  ld->add_option("--preset", ld_preset, "auto | s4 | general")
      ->check(CLI::IsMember({"auto", "s4", "general"}))
      ->capture_default_str();
  on(ld, [&] {
    owned_algebra a = load_algebra(ld_file);
    int single_box = 0;
    if (ld_preset == "s4") {
      single_box = 1;
    } else if (ld_preset == "auto") {
      owned_str cls;
      check(gblx_algebra_check_json(a.p, &cls.p));
      json j = json::parse(cls.str());
      single_box = j["flags"].value("S4MV", false) && j["modals"].size() == 1 ? 1 : 0;
    }
    owned_str rep;
    check(gblx_lddt_json(a.p, ld_gamma.c_str(), ld_delta.c_str(), ld_psi.c_str(),
                         single_box, &rep.p));
    print_report(rep.str());
    std::string status = json::parse(rep.str()).value("status", "");
    if (status == "witness")
      rc = 0;
    else if (status == "no-witness")
      rc = 1;
    else
      die("search bounds exhausted without a decision");
  });

  // lambda
  std::string la_file, la_elem;
  int la_power = 1;
  auto* la = app.add_subcommand("lambda", "iterated product of all modal images");
  la->add_option("file", la_file, "algebra JSON file")->required();
  la->add_option("--element", la_elem, "carrier name")->required();
  la->add_option("--power", la_power, "iteration count, >= 0")->capture_default_str();
  on(la, [&] {
    owned_algebra a = load_algebra(la_file);
    owned_str rep;
    check(gblx_lambda_json(a.p, la_elem.c_str(), la_power, &rep.p));
    print_report(rep.str());
  });

  // proof-check
  std::string pc_file;
  std::vector<std::string> pc_spot;
  auto* pc = app.add_subcommand("proof-check", "Hilbert-style derivation checking");
  pc->add_option("file", pc_file, "derivation JSON file")->required();
  pc->add_option("--spotcheck", pc_spot,
                 "algebra files for the semantic soundness cross-check");
  on(pc, [&] {
    std::string text = read_file(pc_file);
    owned_str rep;
    check(gblx_proof_check_json(text.c_str(), &rep.p));
    if (pc_spot.empty()) {
      print_report(rep.str());
      rc = verdict(rep.str(), "ok");
      return;
    }
    json combined;
    combined["check"] = json::parse(rep.str());
    if (!combined["check"].value("ok", false)) {
      print_json(combined);
      rc = 1;
      return;
    }
    std::vector<owned_algebra> algs;
    for (const auto& f : pc_spot) algs.push_back(load_algebra(f));
    std::vector<const gblx_algebra*> ptrs;
    for (const auto& a : algs) ptrs.push_back(a.p);
    owned_str srep;
    check(gblx_proof_soundness_json(text.c_str(), ptrs.data(), (int)ptrs.size(),
                                    &srep.p));
    combined["soundness"] = json::parse(srep.str());
    print_json(combined);
    rc = combined["soundness"].value("pass", false) ? 0 : 1;
  });

  // suite
  std::string su_name, su_filter;
  bool su_list = false;
  auto* su = app.add_subcommand("suite", "property sweeps over the built-in corpus");
  su->add_option("name", su_name, "suite name");
  su->add_flag("--list", su_list, "print the suite names");
  su->add_option("--filter", su_filter, "keep only corpus entries whose name contains this");
  on(su, [&] {
    if (su_list) {
      owned_str names;
      check(gblx_suite_names_json(&names.p));
      print_report(names.str());
      return;
    }
    if (su_name.empty()) die("suite name required (or --list)");
    owned_str rep;
    check(gblx_suite_run_json(su_name.c_str(), seed, su_filter.c_str(), &rep.p));
    print_report(rep.str());
    json j = json::parse(rep.str());
    if (j.value("checked", 0L) == 0) die("the corpus filter matched nothing");
    rc = j.value("failures", 0L) == 0 ? 0 : 1;
  });

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }
    if (const char* env = std::getenv("GBLX_CAP_ASSIGNMENTS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (!end || *end || v <= 0) die("GBLX_CAP_ASSIGNMENTS must be a positive integer");
      check(gblx_cap_set("assignments", v));
    }
    for (const auto& c : cap_args) apply_cap_arg(c);
    for (const auto& [sub, fn] : actions)
      if (sub->parsed()) fn();
    return rc;
  } catch (const cli_exit& e) {
    return e.code;
  }
}
