#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/formula.hpp"
#include "core/formula_pool.hpp"
#include "core/parse.hpp"

using namespace gblx;

namespace {

const std::vector<std::string> no_modals;
const std::vector<std::string> tense_sig{"G", "H"};
const std::vector<std::string> box_sig{"box"};

std::string reprint(const std::string& text, const std::vector<std::string>& sig) {
  return print(parse_formula(text, sig));
}

}  // namespace

TEST_CASE("parser precedence, tightest to loosest") {
  CHECK(reprint("~p1 * p2", no_modals) == "((p1 -> 0) * p2)");
  CHECK(reprint("p1 * p2 & p3", no_modals) == "((p1 * p2) & p3)");
  CHECK(reprint("p1 & p2 | p3", no_modals) == "((p1 & p2) | p3)");
  CHECK(reprint("p1 | p2 -> p3", no_modals) == "((p1 | p2) -> p3)");
  CHECK(reprint("p1 -> p2 -> p3", no_modals) == "(p1 -> (p2 -> p3))");
  CHECK(reprint("(p1 -> p2) -> p3", no_modals) == "((p1 -> p2) -> p3)");
}

TEST_CASE("negation and biconditional expand at parse time") {
  fptr f = parse_formula("~p1", no_modals);
  CHECK(f->kind == fk::imp);
  CHECK(f->rhs->kind == fk::zero);

  fptr g = parse_formula("p1 <-> p2", no_modals);
  CHECK(g->kind == fk::meet);
  CHECK(print(g) == "((p1 -> p2) & (p2 -> p1))");

  // Left-associative chain.
  CHECK(reprint("p1 <-> p2 <-> p3", no_modals) ==
        "((((p1 -> p2) & (p2 -> p1)) -> p3) & (p3 -> ((p1 -> p2) & (p2 -> p1))))");
}

TEST_CASE("modal application and the P/F abbreviations") {
  CHECK(reprint("G p1", tense_sig) == "(G p1)");
  CHECK(reprint("G H p1", tense_sig) == "(G (H p1))");
  CHECK(reprint("P p1", tense_sig) == "((H (p1 -> 0)) -> 0)");
  CHECK(reprint("F p1", tense_sig) == "((G (p1 -> 0)) -> 0)");
  CHECK(reprint("box p1 -> box p2", box_sig) == "((box p1) -> (box p2))");

  // P needs H in the signature, F needs G.
  CHECK_THROWS_AS(parse_formula("P p1", box_sig), error);
  CHECK_THROWS_AS(parse_formula("F p1", no_modals), error);
  // Modal names outside the signature are rejected.
  CHECK_THROWS_AS(parse_formula("box p1", tense_sig), error);
}

TEST_CASE("parse errors carry a byte offset") {
  try {
    parse_formula("p1 -> $", no_modals);
    FAIL("expected a parse error");
  } catch (const error& e) {
    CHECK(e.code == errc::parse);
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_formula("", no_modals), error);
  CHECK_THROWS_AS(parse_formula("p1 p2", no_modals), error);
  CHECK_THROWS_AS(parse_formula("(p1", no_modals), error);
  CHECK_THROWS_AS(parse_formula("p", no_modals), error);
  CHECK_THROWS_AS(parse_formula("px", no_modals), error);
  // Leading zeros normalize away in the index.
  CHECK(print(parse_formula("p01", no_modals)) == "p1");
}

TEST_CASE("print is a fixpoint and round-trips structurally") {
  const char* samples[] = {
      "p1",
      "0",
      "1",
      "~~p3",
      "p1 * (p2 | ~p3) -> p1 & p2",
      "G (p1 -> H p2) <-> F p1",
  };
  for (const char* s : samples) {
    fptr f = parse_formula(s, tense_sig);
    std::string once = print(f);
    fptr g = parse_formula(once, tense_sig);
    CHECK(equal(f, g));
    CHECK(print(g) == once);
  }
}

TEST_CASE("structural helpers") {
  fptr f = parse_formula("p1 * (p2 -> G p7)", tense_sig);
  CHECK(height(f) == 3);
  CHECK(height(formula::mk_var(1)) == 0);
  CHECK(var_indices(f) == std::set<int>{1, 2, 7});
  CHECK(modal_names(f) == std::set<std::string>{"G"});
  CHECK(!is_pure(f));
  CHECK(is_pure(parse_formula("p1 -> ~p2", no_modals)));

  fptr a = parse_formula("p1 -> p2", no_modals);
  fptr b = parse_formula("p1  ->  p2", no_modals);
  fptr c = parse_formula("p2 -> p1", no_modals);
  CHECK(equal(a, b));
  CHECK(!equal(a, c));
}

TEST_CASE("relabel_modal renames exactly the matching nodes") {
  fptr f = parse_formula("G (p1 -> H p2)", tense_sig);
  fptr g = relabel_modal(f, "G", "box");
  CHECK(print(g) == "(box (p1 -> (H p2)))");
  // Untouched names are shared, not copied.
  CHECK(print(relabel_modal(f, "K", "J")) == print(f));
}

TEST_CASE("interior translation shapes") {
  fptr p12 = parse_formula("p1 -> p2", no_modals);
  CHECK(print(translate_m(p12)) == "(box ((box p1) -> (box p2)))");
  CHECK(print(translate_t(p12)) == "(G ((G p1) -> (G p2)))");

  // Homomorphic on the lattice and monoid structure, constants pass through.
  CHECK(print(translate_m(parse_formula("p1 & p2", no_modals))) == "((box p1) & (box p2))");
  CHECK(print(translate_m(parse_formula("p1 | p2", no_modals))) == "((box p1) | (box p2))");
  CHECK(print(translate_m(parse_formula("p1 * p2", no_modals))) == "((box p1) * (box p2))");
  CHECK(print(translate_m(parse_formula("0", no_modals))) == "0");
  CHECK(print(translate_m(parse_formula("1", no_modals))) == "1");
  CHECK(print(translate_m(parse_formula("~p1", no_modals))) == "(box ((box p1) -> 0))");

  // Nested implication guards every implication node.
  CHECK(print(translate_m(parse_formula("p1 -> (p2 -> p3)", no_modals))) ==
        "(box ((box p1) -> (box ((box p2) -> (box p3)))))");

  // The two translations agree up to the modal name.
  fptr deep = parse_formula("(p1 * ~p2 -> p3) | (p1 <-> 0)", no_modals);
  CHECK(equal(relabel_modal(translate_m(deep), "box", "G"), translate_t(deep)));

  // Modal inputs are rejected.
  CHECK_THROWS_AS(translate_m(parse_formula("G p1", tense_sig)), error);
}

TEST_CASE("modal signature validation") {
  validate_signature({"box"});
  validate_signature({"G", "H"});
  validate_signature({"sq", "circ"});
  CHECK_THROWS_AS(validate_signature({"G", "G"}), error);
  CHECK_THROWS_AS(validate_signature({"P"}), error);
  CHECK_THROWS_AS(validate_signature({"F"}), error);
  CHECK_THROWS_AS(validate_signature({"p12"}), error);
  CHECK_THROWS_AS(validate_signature({"0"}), error);
  CHECK_THROWS_AS(validate_signature({"has space"}), error);
  CHECK_THROWS_AS(validate_signature({""}), error);
}

TEST_CASE("equation splits on the top-level equals sign") {
  auto [l, r] = parse_equation("p1 | ~p1 = 1", no_modals);
  CHECK(print(l) == "(p1 | (p1 -> 0))");
  CHECK(print(r) == "1");
  CHECK_THROWS_AS(parse_equation("p1 -> p2", no_modals), error);
  CHECK_THROWS_AS(parse_equation("p1 = p2 = p3", no_modals), error);
}

TEST_CASE("formula pool is deterministic and deduplicated") {
  formula_pool a = build_pool(box_sig, 2, 50, 4, 7);
  formula_pool b = build_pool(box_sig, 2, 50, 4, 7);
  CHECK(a.nodes.size() == b.nodes.size());
  CHECK(a.seeded.size() == 50);
  for (size_t i = 0; i < a.seeded.size(); ++i)
    CHECK(equal(a.to_formula(a.seeded[i]), b.to_formula(b.seeded[i])));

  formula_pool c = build_pool(box_sig, 2, 50, 4, 8);
  bool any_differ = c.nodes.size() != a.nodes.size();
  for (size_t i = 0; !any_differ && i < a.seeded.size(); ++i)
    any_differ = !equal(a.to_formula(a.seeded[i]), c.to_formula(c.seeded[i]));
  CHECK(any_differ);

  // Children precede parents, so tables can be filled in one pass.
  for (size_t i = 0; i < a.nodes.size(); ++i) {
    const pool_node& n = a.nodes[i];
    if (n.lhs >= 0) CHECK(n.lhs < (int)i);
    if (n.rhs >= 0) CHECK(n.rhs < (int)i);
  }

  // Heights match the tree view and the exhaustive layer is complete:
  // every distinct formula of height <= 2 appears exactly once.
  std::set<std::string> printed;
  for (int id : a.exhaustive) {
    CHECK(a.height[id] <= 2);
    CHECK(a.height[id] == height(a.to_formula(id)));
    CHECK(printed.insert(print(a.to_formula(id))).second);
  }
  for (int id : a.seeded) CHECK(a.height[id] <= 4);
}

TEST_CASE("pool without modals covers the pure height-1 layer") {
  formula_pool p = build_pool(no_modals, 1, 0, 1, 0);
  // Leaves: p1, p2, 0, 1.  Height 1: 4 connectives over 4*4 ordered pairs
  // minus nothing (all distinct as trees): 4 + 64 = 68 nodes.
  CHECK(p.exhaustive.size() == 68);
  for (int id : p.exhaustive) CHECK(is_pure(p.to_formula(id)));
}
