#include "core/corpus.hpp"

namespace gblx {

namespace {

corpus build() {
  corpus c;
  std::vector<finite_algebra> chains;
  for (int n = 2; n <= 5; ++n) chains.push_back(lukasiewicz_chain(n));

  for (const auto& ch : chains) c.plain.push_back(ch);
  for (size_t i = 0; i < chains.size(); ++i)
    for (size_t j = i; j < chains.size(); ++j)
      c.plain.push_back(direct_product({chains[i], chains[j]}));
  c.flat_count = c.plain.size();

  c.posets.push_back(finite_poset::make("chain1", {"0"}, {}));
  c.posets.push_back(finite_poset::make("chain2", {"0", "1"}, {{0, 1}}));
  c.posets.push_back(finite_poset::make("antichain2", {"0", "1"}, {}));
  c.posets.push_back(finite_poset::make("chain3", {"0", "1", "2"}, {{0, 1}, {1, 2}}));
  c.posets.push_back(finite_poset::make("antichain3", {"0", "1", "2"}, {}));
  c.posets.push_back(finite_poset::make("vee", {"0", "1", "2"}, {{0, 1}, {0, 2}}));
  c.posets.push_back(finite_poset::make("wedge", {"0", "1", "2"}, {{0, 2}, {1, 2}}));
  c.posets.push_back(finite_poset::make("chain2_point", {"0", "1", "2"}, {{0, 1}}));

  for (const auto& p : c.posets) {
    const int k = p.size();
    for (long combo = 0; combo < (1L << k); ++combo) {
      std::vector<finite_algebra> factors;
      for (int e = 0; e < k; ++e) {
        bool use_l3 = (combo >> (k - 1 - e)) & 1;  // lex order, first factor most significant
        factors.push_back(use_l3 ? chains[1] : chains[0]);
      }
      c.products.push_back(labeled_product::build(p, std::move(factors)));
      c.plain.push_back(c.products.back().prod);
    }
  }

  for (size_t i = 0; i < c.flat_count; ++i) {
    finite_algebra b = with_identity_modal(c.plain[i], "box");
    b.name += "_box";
    c.boxed.push_back(std::move(b));
    finite_algebra t = with_identity_modal(with_identity_modal(c.plain[i], "G"), "H");
    t.name += "_tense";
    c.tense.push_back(std::move(t));
  }
  for (const auto& lp : c.products) {
    c.boxed.push_back(modal_product(lp, false));
    c.tense.push_back(modal_product(lp, true));
  }
  return c;
}

}  // namespace

const corpus& default_corpus() {
  static const corpus c = build();
  return c;
}

}  // namespace gblx
