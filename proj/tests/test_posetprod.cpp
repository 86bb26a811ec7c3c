#include <doctest.h>

#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/config.hpp"
#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/poset.hpp"
#include "core/posetprod.hpp"

using namespace gblx;

namespace {

finite_poset chain2() { return finite_poset::make("2ch", {"a", "b"}, {{0, 1}}); }

labeled_product pp22() {
  return labeled_product::build(chain2(), {lukasiewicz_chain(2), lukasiewicz_chain(2)});
}

struct cap_guard {
  caps saved = global_caps();
  ~cap_guard() { global_caps() = saved; }
};

}  // namespace

TEST_CASE("poset construction closes transitively and rejects cycles") {
  finite_poset p = finite_poset::make("3ch", {"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK(!p.less(2, 0));
  CHECK(!p.less(0, 0));
  CHECK_THROWS_AS(finite_poset::make("cyc", {"a", "b"}, {{0, 1}, {1, 0}}), error);
  CHECK_THROWS_AS(finite_poset::make("refl", {"a"}, {{0, 0}}), error);
  CHECK_THROWS_AS(finite_poset::make("oob", {"a"}, {{0, 3}}), error);
}

TEST_CASE("label repair maps on the two-chain square") {
  labeled_product lp = pp22();
  const finite_algebra& a = lp.prod;
  REQUIRE(a.size() == 4);
  idx e00 = a.element("(0,0)"), e01 = a.element("(0,1)");
  idx e10 = a.element("(1,0)"), e11 = a.element("(1,1)");

  // sigma zeroes a lower 1 whose upper neighbour is not 1.
  CHECK(lp.sigma[e00] == e00);
  CHECK(lp.sigma[e01] == e01);
  CHECK(lp.sigma[e10] == e00);
  CHECK(lp.sigma[e11] == e11);
  // delta pushes an upper 1 over a nonzero lower label to 1 (and keeps
  // a clean 0-below labeling as it is).
  CHECK(lp.delta[e00] == e00);
  CHECK(lp.delta[e01] == e01);
  CHECK(lp.delta[e10] == e11);
  CHECK(lp.delta[e11] == e11);

  // The conjugate of delta fixes (1,0): ~(1,0) = (0,1), delta keeps it,
  // and negating again lands back on (1,0).  Its fixpoints are the
  // down-monotone labelings, so (0,1) drops to the bottom instead.
  table1 h = box_from_delta(lp);
  CHECK(h[e10] == e10);
  CHECK(h[e00] == e00);
  CHECK(h[e01] == e00);
  CHECK(h[e11] == e11);

  // Exactly the antichain-consistent labelings are sigma-fixpoints, and
  // on this poset they are the monotone 0/1 labelings.
  std::vector<idx> ac;
  for (idx x = 0; x < a.size(); ++x) {
    CHECK(lp.ac_labeling(x) == (lp.sigma[x] == x));
    if (lp.ac_labeling(x)) ac.push_back(x);
  }
  CHECK(ac == std::vector<idx>{e00, e01, e11});
}

TEST_CASE("sigma and delta are adjoint on every corpus product") {
  for (const labeled_product& lp : default_corpus().products) {
    const finite_algebra& a = lp.prod;
    for (idx x = 0; x < a.size(); ++x)
      for (idx y = 0; y < a.size(); ++y)
        CHECK(a.leq(x, lp.sigma[y]) == a.leq(lp.delta[x], y));
  }
}

TEST_CASE("index_of inverts the tuple listing") {
  labeled_product lp = pp22();
  for (idx x = 0; x < lp.prod.size(); ++x) CHECK(lp.index_of(lp.tuples[x]) == x);
}

TEST_CASE("modal products carry the repair maps as modal tables") {
  labeled_product lp = pp22();
  finite_algebra boxed = modal_product(lp, false);
  REQUIRE(boxed.modals.size() == 1);
  CHECK(boxed.modals[0].name == "box");
  CHECK(boxed.modals[0].map == lp.sigma);
  CHECK(boxed.name == "pp(2ch;L2,L2)_box");

  finite_algebra tense = modal_product(lp, true);
  REQUIRE(tense.modals.size() == 2);
  CHECK(tense.find_modal("G")->map == lp.sigma);
  CHECK(tense.find_modal("H")->map == box_from_delta(lp));
  CHECK(classify(tense).is_s4tmv);
}

TEST_CASE("conucleus laws hold for sigma and fail for a non-idempotent map") {
  finite_algebra boxed = modal_product(pp22(), false);
  CHECK(check_conucleus(boxed, "box").pass);
  CHECK_THROWS_AS(check_conucleus(boxed, "nosuch"), error);

  // Send everything strictly down one step on the 4-chain: contracting and
  // monotone, but applying it twice keeps sliding, so idempotence fails.
  finite_algebra c = lukasiewicz_chain(4);
  c.modals.push_back({"g", {0, 0, 1, 2}});
  rl_report r = check_conucleus(c, "g");
  REQUIRE(!r.pass);
  CHECK(r.first->law == "conucleus-idempotent");
  CHECK(r.first->witness == std::vector<idx>{2});
}

TEST_CASE("interior image of the square collapse is the three-element goedel chain") {
  finite_algebra boxed = modal_product(pp22(), false);
  interior_image img = conucleus_image(boxed, "box");
  const finite_algebra& b = img.algebra;
  REQUIRE(b.size() == 3);
  CHECK(b.carrier == std::vector<std::string>{"(0,0)", "(0,1)", "(1,1)"});
  CHECK(b.zero == 0);
  CHECK(b.one == 2);
  // Fusion degenerates to meet while implication is the chain order test,
  // so the image is Goedel rather than MV.
  CHECK(b.mult == b.meet);
  CHECK(b.impl == table2{2, 2, 2, 0, 2, 2, 0, 1, 2});
  CHECK(b.neg_of(b.element("(0,1)")) == b.zero);
  class_report c = classify(b);
  CHECK(c.is_rl);
  CHECK(c.is_gbl);
  CHECK(c.is_bl);
  CHECK(!c.is_mv);

  // Round-trip between image indices and parent fixpoints.
  for (idx i = 0; i < b.size(); ++i) CHECK(img.from_parent[img.to_parent[i]] == i);
  int fix = 0;
  for (idx x = 0; x < boxed.size(); ++x)
    if (boxed.modals[0].map[x] == x) ++fix;
  CHECK(fix == b.size());
}

TEST_CASE("image of the identity interior is the algebra itself") {
  finite_algebra a = with_identity_modal(lukasiewicz_chain(3), "box");
  interior_image img = conucleus_image(a, "box");
  CHECK(img.algebra.size() == a.size());
  CHECK(img.algebra.mult == a.mult);
  CHECK(img.algebra.impl == a.impl);
  CHECK(check_conucleus(a, "box").pass);
}

TEST_CASE("factors must be residuated and classify as mv for modal products") {
  finite_algebra broken = lukasiewicz_chain(2);
  broken.mult = broken.join;
  CHECK_THROWS_AS(labeled_product::build(chain2(), {broken, lukasiewicz_chain(2)}), error);

  // Goedel factor: fine for the plain product, rejected by modal_product.
  finite_algebra g = conucleus_image(modal_product(pp22(), false), "box").algebra;
  labeled_product lp = labeled_product::build(chain2(), {g, lukasiewicz_chain(2)});
  CHECK(lp.prod.size() == 6);
  CHECK_THROWS_AS(modal_product(lp, false), error);
}

TEST_CASE("poset and product size caps") {
  cap_guard guard;
  global_caps().max_poset = 2;
  try {
    finite_poset::make("3ch", {"a", "b", "c"}, {{0, 1}, {1, 2}});
    FAIL("expected the poset cap to fire");
  } catch (const error& e) {
    CHECK(e.code == errc::cap);
  }

  global_caps().max_poset = 4;
  finite_poset p3 = finite_poset::make("3ch", {"a", "b", "c"}, {{0, 1}, {1, 2}});
  std::vector<finite_algebra> fs{lukasiewicz_chain(2), lukasiewicz_chain(2),
                                 lukasiewicz_chain(2)};
  CHECK(labeled_product::build(p3, fs).prod.size() == 8);

  global_caps().max_product = 4;
  try {
    direct_product({lukasiewicz_chain(3), lukasiewicz_chain(3)});
    FAIL("expected the product cap to fire");
  } catch (const error& e) {
    CHECK(e.code == errc::cap);
  }
}

TEST_CASE("an antichain product repairs nothing") {
  finite_poset anti = finite_poset::make("2anti", {"a", "b"}, {});
  labeled_product lp = labeled_product::build(anti, {lukasiewicz_chain(2), lukasiewicz_chain(3)});
  for (idx x = 0; x < lp.prod.size(); ++x) {
    CHECK(lp.sigma[x] == x);
    CHECK(lp.delta[x] == x);
    CHECK(lp.ac_labeling(x));
  }
  // With sigma the identity, the modal product is just an identity box.
  finite_algebra boxed = modal_product(lp, false);
  CHECK(classify(boxed).is_s4mv);
}
