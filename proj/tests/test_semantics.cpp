#include <doctest.h>

#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/config.hpp"
#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/parse.hpp"
#include "core/posetprod.hpp"
#include "core/semantics.hpp"

using namespace gblx;

namespace {

const std::vector<std::string> no_modals;

equation eq(const std::string& text, const std::vector<std::string>& sig = no_modals) {
  auto [l, r] = parse_equation(text, sig);
  return {l, r};
}

struct cap_guard {
  caps saved = global_caps();
  ~cap_guard() { global_caps() = saved; }
};

}  // namespace

TEST_CASE("evaluation on the three-chain") {
  finite_algebra l3 = lukasiewicz_chain(3);
  assignment h{{1, 2}, {1, 2}};
  CHECK(h.value_of(1) == 1);
  CHECK_THROWS_AS(h.value_of(3), error);

  CHECK(evaluate(l3, h, parse_formula("p1 -> p2", no_modals)) == 2);
  CHECK(evaluate(l3, h, parse_formula("p2 -> p1", no_modals)) == 1);
  CHECK(evaluate(l3, h, parse_formula("~p1", no_modals)) == 1);
  CHECK(evaluate(l3, h, parse_formula("p1 * p1", no_modals)) == 0);
  CHECK(evaluate(l3, h, parse_formula("p1 | ~p1", no_modals)) == 1);
  CHECK(evaluate(l3, h, parse_formula("0", no_modals)) == 0);
  CHECK(evaluate(l3, h, parse_formula("1", no_modals)) == 2);
}

TEST_CASE("modal evaluation uses the named table") {
  finite_poset p2 = finite_poset::make("2ch", {"a", "b"}, {{0, 1}});
  finite_algebra t = modal_product(
      labeled_product::build(p2, {lukasiewicz_chain(2), lukasiewicz_chain(2)}), true);
  idx e10 = t.element("(1,0)");
  assignment h{{1}, {e10}};
  CHECK(evaluate(t, h, parse_formula("G p1", {"G", "H"})) == t.element("(0,0)"));
  CHECK(evaluate(t, h, parse_formula("H p1", {"G", "H"})) == e10);
  CHECK(evaluate(t, h, parse_formula("P p1", {"G", "H"})) == t.element("(1,1)"));
  // A modal missing from the algebra is an evaluation error.
  CHECK_THROWS_AS(evaluate(t, h, parse_formula("box p1", {"box"})), error);
}

TEST_CASE("excluded middle splits the two- and three-chains") {
  equation em = eq("p1 | ~p1 = 1");
  validity_report v2 = is_valid(lukasiewicz_chain(2), em);
  CHECK(v2.valid);
  CHECK(v2.assignments_checked == 2);

  validity_report v3 = is_valid(lukasiewicz_chain(3), em);
  CHECK(!v3.valid);
  REQUIRE(v3.countermodel.has_value());
  CHECK(v3.countermodel->vars == std::vector<int>{1});
  CHECK(v3.countermodel->vals == std::vector<idx>{1});
  CHECK(v3.assignments_checked == 2);  // stops at the first failure
}

TEST_CASE("chain identities") {
  for (int n = 2; n <= 5; ++n) {
    finite_algebra a = lukasiewicz_chain(n);
    CHECK(is_valid(a, eq("(p1 -> p2) | (p2 -> p1) = 1")).valid);
    CHECK(is_valid(a, eq("p1 * (p1 -> p2) = p1 & p2")).valid);
    CHECK(is_valid(a, eq("~~p1 = p1")).valid);
  }
}

TEST_CASE("the goedel image drops involution with the least countermodel") {
  finite_poset p2 = finite_poset::make("2ch", {"a", "b"}, {{0, 1}});
  finite_algebra boxed = modal_product(
      labeled_product::build(p2, {lukasiewicz_chain(2), lukasiewicz_chain(2)}), false);
  finite_algebra g = conucleus_image(boxed, "box").algebra;
  validity_report r = is_valid(g, eq("~~p1 = p1"));
  CHECK(!r.valid);
  REQUIRE(r.countermodel.has_value());
  CHECK(r.countermodel->vals == std::vector<idx>{g.element("(0,1)")});
  CHECK(is_valid(g, eq("p1 * (p1 -> p2) = p1 & p2")).valid);
  CHECK(is_valid(g, eq("p1 * p1 = p1")).valid);
}

TEST_CASE("assignment order puts the smallest variable most significant") {
  // p1 & p2 = p1 fails first at p1=1, p2=0 on the two-chain, scanning
  // p1 as the outer digit.
  validity_report r = is_valid(lukasiewicz_chain(2), eq("p1 & p2 = p1"));
  CHECK(!r.valid);
  CHECK(r.countermodel->vars == std::vector<int>{1, 2});
  CHECK(r.countermodel->vals == std::vector<idx>{1, 0});
  CHECK(r.assignments_checked == 3);
}

TEST_CASE("caps bound the validity sweep") {
  cap_guard guard;
  equation four = eq("p1 & p2 & p3 & p4 = p4 & p3 & p2 & p1");
  CHECK_THROWS_AS(is_valid(lukasiewicz_chain(2), four), error);  // four variables

  global_caps().max_assignments = 8;
  CHECK(is_valid(lukasiewicz_chain(2), eq("p1 & p2 & p3 = p3 & p2 & p1")).assignments_checked ==
        8);
  try {
    is_valid(lukasiewicz_chain(3), eq("p1 & p2 & p3 = p3"));
    FAIL("expected the assignment cap to fire");
  } catch (const error& e) {
    CHECK(e.code == errc::cap);
  }
}

TEST_CASE("consequence over a finite class of algebras") {
  finite_algebra l2 = lukasiewicz_chain(2), l3 = lukasiewicz_chain(3);
  std::vector<const finite_algebra*> ks{&l2, &l3};

  consequence_report ok =
      semantic_consequence(ks, {eq("p1 = 1")}, eq("p1 * p1 = 1"));
  CHECK(ok.holds);
  CHECK(ok.algebra_index == -1);

  consequence_report bad = semantic_consequence(ks, {eq("p1 = 1")}, eq("p2 = 1"));
  CHECK(!bad.holds);
  CHECK(bad.algebra_index == 0);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->vars == std::vector<int>{1, 2});
  CHECK(bad.witness->vals == std::vector<idx>{1, 0});

  // Premise-free consequence is plain validity on every algebra.
  consequence_report em = semantic_consequence(ks, {}, eq("p1 | ~p1 = 1"));
  CHECK(!em.holds);
  CHECK(em.algebra_index == 1);

  // No algebras: vacuously true.
  CHECK(semantic_consequence({}, {}, eq("0 = 1")).holds);
}

TEST_CASE("consequence reads variables across premises and conclusion") {
  finite_algebra l3 = lukasiewicz_chain(3);
  std::vector<const finite_algebra*> ks{&l3};
  // p2 = 1 and p2 -> p1 = 1 force p1 = 1 by residuation.
  consequence_report r =
      semantic_consequence(ks, {eq("p2 = 1"), eq("(p2 -> p1) = 1")}, eq("p1 = 1"));
  CHECK(r.holds);
  CHECK(r.assignments_checked == 9);
}

TEST_CASE("translation equivalence through the interior image") {
  finite_poset p2 = finite_poset::make("2ch", {"a", "b"}, {{0, 1}});
  labeled_product lp =
      labeled_product::build(p2, {lukasiewicz_chain(2), lukasiewicz_chain(2)});

  finite_algebra boxed = modal_product(lp, false);
  fptr f = parse_formula("p1 -> p2", no_modals);
  translation_report r = check_translation_equivalence(boxed, f);
  CHECK(r.pass);
  CHECK(r.mode == "box");
  CHECK(r.pointwise);
  CHECK(r.validity);
  CHECK(r.fixedness);
  // 16 parent assignments for the pointwise pass, 9 image assignments for
  // the validity comparison.
  CHECK(r.assignments_checked == 25);

  finite_algebra tense = modal_product(lp, true);
  translation_report t = check_translation_equivalence(tense, parse_formula("~~p1", no_modals));
  CHECK(t.pass);
  CHECK(t.mode == "tense");

  // Identity interior: image and parent coincide, everything passes.
  finite_algebra idbox = with_identity_modal(lukasiewicz_chain(4), "box");
  CHECK(check_translation_equivalence(idbox, parse_formula("p1 * p2 -> p1", no_modals)).pass);

  CHECK_THROWS_AS(check_translation_equivalence(lukasiewicz_chain(3), f), error);
  CHECK_THROWS_AS(check_translation_equivalence(boxed, parse_formula("box p1", {"box"})),
                  error);
}
