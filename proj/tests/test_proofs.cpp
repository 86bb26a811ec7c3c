#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/error.hpp"
#include "core/parse.hpp"
#include "core/proofs.hpp"

using namespace gblx;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fptr pf(const std::string& text, const std::vector<std::string>& sig = {}) {
  return parse_formula(text, sig);
}

substitution sub3(const std::string& a, const std::string& b = "",
                  const std::string& c = "") {
  substitution s;
  s.map[0] = pf(a);
  if (!b.empty()) s.map[1] = pf(b);
  if (!c.empty()) s.map[2] = pf(c);
  return s;
}

}  // namespace

TEST_CASE("scheme names round-trip") {
  const char* names[] = {"A1", "A2",  "A3",  "A4", "A5",   "A6",   "A7", "A8",
                         "A9", "A10", "A11", "A12", "A13", "A14",  "A15", "K",
                         "P",  "M",   "One", "Zero", "T",  "Four", "GP", "HF"};
  for (const char* n : names) {
    auto s = scheme_from_name(n);
    REQUIRE(s.has_value());
    CHECK(scheme_name(*s) == std::string(n));
  }
  CHECK(!scheme_from_name("A16").has_value());
  CHECK(!scheme_from_name("MP").has_value());
  CHECK(scheme_takes_modal(scheme_id::k));
  CHECK(scheme_takes_modal(scheme_id::four));
  CHECK(!scheme_takes_modal(scheme_id::a1));
  CHECK(!scheme_takes_modal(scheme_id::gp));
}

TEST_CASE("instantiation produces the expected shapes") {
  CHECK(print(instantiate(scheme_id::a1, sub3("p1"))) == "(p1 -> p1)");
  CHECK(print(instantiate(scheme_id::a3, sub3("p2", "p3"))) == "((p2 * p3) -> (p3 * p2))");
  CHECK(print(instantiate(scheme_id::a4, sub3("p2", "p3"))) == "((p2 * p3) -> p3)");
  CHECK(print(instantiate(scheme_id::a7, sub3("p1", "p2"))) ==
        "((p1 * (p1 -> p2)) -> (p1 & p2))");
  CHECK(print(instantiate(scheme_id::a13, sub3("p1"))) == "(0 -> p1)");
  // The biconditional in a scheme expands like the surface abbreviation.
  CHECK(print(instantiate(scheme_id::a15, sub3("p1"))) ==
        "((((p1 -> 0) -> 0) -> p1) & (p1 -> ((p1 -> 0) -> 0)))");
  CHECK(print(instantiate(scheme_id::k, sub3("p1", "p2"), "G")) ==
        "((G (p1 -> p2)) -> ((G p1) -> (G p2)))");
  CHECK(print(instantiate(scheme_id::t, sub3("p1"), "box")) == "((box p1) -> p1)");
  CHECK(print(instantiate(scheme_id::four, sub3("p1"), "box")) ==
        "((box p1) -> (box (box p1)))");
  CHECK(print(instantiate(scheme_id::gp, sub3("p1"))) ==
        "(p1 -> (G ((H (p1 -> 0)) -> 0)))");
  // Unbound metavariable that the scheme mentions.
  CHECK_THROWS_AS(instantiate(scheme_id::a2, sub3("p1")), error);
  // Parameterized scheme with no modal name.
  CHECK_THROWS_AS(instantiate(scheme_id::k, sub3("p1", "p2")), error);
}

TEST_CASE("axiom matching picks the unique substitution") {
  fptr inst = instantiate(scheme_id::a2, sub3("p1", "~p2", "0"));
  auto m = match_axiom(inst, scheme_id::a2);
  REQUIRE(m.has_value());
  CHECK(equal(m->map[0], pf("p1")));
  CHECK(equal(m->map[1], pf("~p2")));
  CHECK(equal(m->map[2], pf("0")));

  // The fusion projection keeps only its literal side.
  fptr right = pf("(p1 * p2) -> p2");
  CHECK(match_axiom(right, scheme_id::a4).has_value());
  fptr left = pf("(p1 * p2) -> p1");
  CHECK(!match_axiom(left, scheme_id::a4).has_value());
  CHECK(match_axiom(pf("(p1 * p1) -> p1"), scheme_id::a4).has_value());

  // Commutativity needs the mirrored fusion on the right.
  CHECK(match_axiom(pf("(p1 * p2) -> (p2 * p1)"), scheme_id::a3).has_value());
  CHECK(!match_axiom(pf("(p1 * p2) -> (p1 * p2)"), scheme_id::a3).has_value());
  CHECK(match_axiom(pf("(p1 * p1) -> (p1 * p1)"), scheme_id::a3).has_value());

  // Modal parameter must line up.
  fptr tb = instantiate(scheme_id::t, sub3("p1"), "box");
  CHECK(match_axiom(tb, scheme_id::t, "box").has_value());
  CHECK(!match_axiom(tb, scheme_id::t, "G").has_value());
}

TEST_CASE("presets carry the advertised schemes and signatures") {
  logic_preset gbl = make_preset("GBL");
  CHECK(gbl.schemes.size() == 13);
  CHECK(!gbl.has_nec);
  CHECK(gbl.signature.empty());

  CHECK(make_preset("BL").schemes.size() == 14);
  CHECK(make_preset("L").schemes.size() == 15);

  logic_preset li = make_preset("L(I)", {"box"});
  CHECK(li.schemes.size() == 20);
  CHECK(li.has_nec);
  CHECK(li.signature == std::vector<std::string>{"box"});

  logic_preset li2 = make_preset("L(I)", {"G", "H"});
  CHECK(li2.signature == std::vector<std::string>{"G", "H"});
  CHECK(preset_axiom_instances(li2).size() == 15 + 5 * 2);

  CHECK(make_preset("S4L(I)", {"box"}).schemes.size() == 22);
  logic_preset s4l = make_preset("S4L");
  CHECK(s4l.signature == std::vector<std::string>{"box"});
  CHECK(preset_axiom_instances(s4l).size() == 15 + 7);

  logic_preset s4tl = make_preset("S4tL");
  CHECK(s4tl.schemes.size() == 24);
  CHECK(s4tl.signature == std::vector<std::string>{"G", "H"});
  CHECK(preset_axiom_instances(s4tl).size() == 15 + 7 * 2 + 2);

  CHECK_THROWS_AS(make_preset("GBL", {"box"}), error);   // propositional, no modals
  CHECK_THROWS_AS(make_preset("S4L", {"G"}), error);     // fixed signature
  CHECK_THROWS_AS(make_preset("S4tL", {"box"}), error);  // fixed signature
  CHECK_THROWS_AS(make_preset("K4", {}), error);         // unknown name
  CHECK_THROWS_AS(make_preset("L(I)", {"box", "box"}), error);
}

TEST_CASE("derivation json accepts the documented justifications") {
  const char* text = R"js({
    "logic": "L(I)",
    "modals": ["box"],
    "premises": ["p1"],
    "steps": [
      {"formula": "p1", "by": "Premise 1"},
      {"formula": "(box p1)", "by": "Nec 1 box"},
      {"formula": "(p2 -> p2)", "by": "A1"},
      {"formula": "((p1 * p2) -> (p2 * p1))", "by": "A3", "subst": {"phi": "p1", "psi": "p2"}}
    ]
  })js";
  derivation d = derivation_from_json(text);
  CHECK(d.preset.id == preset_id::l_i);
  CHECK(d.premises.size() == 1);
  REQUIRE(d.steps.size() == 4);
  CHECK(d.steps[0].second.k == justification::kind::premise);
  CHECK(d.steps[1].second.k == justification::kind::nec);
  CHECK(d.steps[1].second.modal == "box");
  CHECK(d.steps[3].second.sub.has_value());
  CHECK(check_derivation(d).ok);

  CHECK_THROWS_AS(derivation_from_json("{}"), error);
  CHECK_THROWS_AS(derivation_from_json(R"js({"logic":"GBL","steps":[
    {"formula":"p1","by":"Axiom 7"}]})js"),
                  error);
  CHECK_THROWS_AS(derivation_from_json(R"js({"logic":"GBL","steps":[
    {"formula":"p1","by":"MP one two"}]})js"),
                  error);
}

TEST_CASE("modus ponens direction and range are enforced") {
  const char* swapped = R"js({
    "logic": "GBL",
    "steps": [
      {"formula": "((p1 * p2) -> p2)", "by": "A4"},
      {"formula": "(((p1 * p2) -> p2) -> (p1 -> (p2 -> p2)))", "by": "A6"},
      {"formula": "(p1 -> (p2 -> p2))", "by": "MP 2 1"}
    ]
  })js";
  derivation_report r = check_derivation(derivation_from_json(swapped));
  CHECK(!r.ok);
  CHECK(r.bad_step == 3);

  const char* forward = R"js({
    "logic": "GBL",
    "steps": [
      {"formula": "((p1 * p2) -> p2)", "by": "A4"},
      {"formula": "(((p1 * p2) -> p2) -> (p1 -> (p2 -> p2)))", "by": "A6"},
      {"formula": "(p1 -> (p2 -> p2))", "by": "MP 1 2"}
    ]
  })js";
  CHECK(check_derivation(derivation_from_json(forward)).ok);

  const char* future = R"js({
    "logic": "GBL",
    "steps": [{"formula": "p1", "by": "MP 1 2"}]
  })js";
  CHECK(!check_derivation(derivation_from_json(future)).ok);
}

TEST_CASE("derivation corpus files carry their labels") {
  namespace fs = std::filesystem;
  fs::path dir = fs::path(GBLX_DATA_DIR) / "derivations";
  REQUIRE(fs::is_directory(dir));

  std::map<std::string, derivation_report> reports;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    derivation d = derivation_from_json(slurp(entry.path()));
    reports[entry.path().stem().string()] = check_derivation(d);
  }
  CHECK(reports.size() == 19);

  int valid = 0, broken = 0;
  for (const auto& [name, rep] : reports) {
    INFO(name);
    if (name.rfind("valid_", 0) == 0) {
      CHECK(rep.ok);
      ++valid;
    } else {
      REQUIRE(name.rfind("broken_", 0) == 0);
      CHECK(!rep.ok);
      CHECK(rep.bad_step >= 1);
      CHECK(!rep.reason.empty());
      ++broken;
    }
  }
  CHECK(valid == 8);
  CHECK(broken == 11);

  // Rejection reasons are specific, not generic.
  CHECK(reports["broken_a1_shape"].reason == "not an instance of A1");
  CHECK(reports["broken_premise_range"].reason == "premise 2 does not exist");
  CHECK(reports["broken_mp_swapped"].reason ==
        "step 1 does not have step 2 as its antecedent");
  CHECK(reports["broken_nec_wrong_modal"].reason == "'G' is not in the modal signature");
  CHECK(reports["broken_a14_in_gbl"].reason == "A14 is not a scheme of GBL");
  CHECK(reports["broken_t_in_li"].reason == "T is not a scheme of L(I)");
  CHECK(reports["broken_subst_mismatch"].reason ==
        "the given substitution does not produce this formula from A1");
  CHECK(reports["broken_a4_projection"].reason == "not an instance of A4");
}

TEST_CASE("every preset axiom instance is valid on a matching algebra") {
  finite_algebra l4box = with_identity_modal(lukasiewicz_chain(4), "box");
  logic_preset li = make_preset("S4L(I)", {"box"});
  substitution distinct = sub3("p1", "p2", "p3");
  for (const auto& [scheme, modal] : preset_axiom_instances(li)) {
    fptr inst = instantiate(scheme, distinct, modal);
    INFO(scheme_name(scheme));
    CHECK(is_valid(l4box, {inst, formula::mk_one()}).valid);
  }
}

TEST_CASE("soundness spotcheck on the box congruence derivation") {
  namespace fs = std::filesystem;
  derivation d = derivation_from_json(
      slurp(fs::path(GBLX_DATA_DIR) / "derivations" / "valid_li_box_congruence.json"));
  finite_algebra l3 = with_identity_modal(lukasiewicz_chain(3), "box");
  finite_algebra l4 = with_identity_modal(lukasiewicz_chain(4), "box");
  soundness_report s = soundness_spotcheck(d, {&l3, &l4});
  CHECK(s.holds);
  CHECK(s.consequence.assignments_checked == 9 + 16);

  // An algebra without the right modal signature is rejected.
  finite_algebra plain = lukasiewicz_chain(3);
  CHECK_THROWS_AS(soundness_spotcheck(d, {&plain}), error);
}

TEST_CASE("a broken derivation cannot be spotchecked") {
  namespace fs = std::filesystem;
  derivation d = derivation_from_json(
      slurp(fs::path(GBLX_DATA_DIR) / "derivations" / "broken_mp_swapped.json"));
  finite_algebra l3 = lukasiewicz_chain(3);
  CHECK_THROWS_AS(soundness_spotcheck(d, {&l3}), error);
}
