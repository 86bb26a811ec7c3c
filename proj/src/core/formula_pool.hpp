#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/formula.hpp"

namespace gblx {

// Flat, deduplicated formula store over the variables p1, p2 and the
// constants.  Children always precede parents, so value tables can be
// filled in one forward pass.
struct pool_node {
  fk kind;
  int var = -1;    // fk::var
  int modal = -1;  // fk::modal: index into modal_names
  int lhs = -1, rhs = -1;
};

struct formula_pool {
  std::vector<std::string> modal_names;
  std::vector<pool_node> nodes;
  std::vector<int> height;      // per node
  std::vector<int> exhaustive;  // every formula up to the exhaustive height
  std::vector<int> seeded;      // extra random formulas, deeper

  fptr to_formula(int id) const;
};

// Every formula of height <= exhaustive_height plus seeded_count random
// formulas of height <= seeded_height, all distinct.  The random stream
// depends only on the seed.
formula_pool build_pool(const std::vector<std::string>& modal_names, int exhaustive_height,
                        int seeded_count, int seeded_height, uint64_t seed);

}  // namespace gblx
