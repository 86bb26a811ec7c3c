#pragma once

#include <vector>

#include "core/algebra.hpp"
#include "core/poset.hpp"
#include "core/posetprod.hpp"

namespace gblx {

// The fixed benchmark family: the chains L2..L5, their pairwise products,
// and every poset product over the eight small posets with L2/L3 factors.
// Each algebra appears three times: bare, with box (identity on the flat
// algebras, sigma on the poset products), and with the tense pair G, H.
// The first flat_count entries of each group are the chains and pairwise
// products; the rest align one-to-one with `products`.
struct corpus {
  std::vector<finite_algebra> plain;
  std::vector<finite_algebra> boxed;
  std::vector<finite_algebra> tense;
  std::vector<finite_poset> posets;
  std::vector<labeled_product> products;
  size_t flat_count = 0;
};

// Built once on first use.
const corpus& default_corpus();

}  // namespace gblx
