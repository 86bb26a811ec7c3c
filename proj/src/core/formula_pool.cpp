#include "core/formula_pool.hpp"

#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "core/error.hpp"

namespace gblx {

namespace {

struct pool_builder {
  formula_pool pool;
  std::map<std::array<int, 5>, int> ids;

  int add(fk kind, int var, int modal, int lhs, int rhs) {
    std::array<int, 5> key{(int)kind, var, modal, lhs, rhs};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = (int)pool.nodes.size();
    pool.nodes.push_back({kind, var, modal, lhs, rhs});
    int h = 0;
    if (lhs >= 0) h = pool.height[lhs] + 1;
    if (rhs >= 0 && pool.height[rhs] + 1 > h) h = pool.height[rhs] + 1;
    pool.height.push_back(h);
    ids.emplace(key, id);
    return id;
  }
};

const fk kBinaryKinds[] = {fk::meet, fk::join, fk::fuse, fk::imp};

}  // namespace

fptr formula_pool::to_formula(int id) const {
  if (id < 0 || id >= (int)nodes.size()) fail(errc::invalid, "pool id out of range");
  std::vector<fptr> memo(id + 1);
  for (int i = 0; i <= id; ++i) {
    const pool_node& n = nodes[i];
    switch (n.kind) {
      case fk::var: memo[i] = formula::mk_var(n.var); break;
      case fk::zero: memo[i] = formula::mk_zero(); break;
      case fk::one: memo[i] = formula::mk_one(); break;
      case fk::modal: memo[i] = formula::mk_modal(modal_names[n.modal], memo[n.lhs]); break;
      default: memo[i] = formula::mk_binary(n.kind, memo[n.lhs], memo[n.rhs]); break;
    }
  }
  return memo[id];
}

formula_pool build_pool(const std::vector<std::string>& modal_names, int exhaustive_height,
                        int seeded_count, int seeded_height, uint64_t seed) {
  if (exhaustive_height < 0 || seeded_count < 0 || seeded_height < exhaustive_height)
    fail(errc::invalid, "bad pool shape");
  pool_builder b;
  b.pool.modal_names = modal_names;

  b.add(fk::var, 1, -1, -1, -1);
  b.add(fk::var, 2, -1, -1, -1);
  b.add(fk::zero, -1, -1, -1, -1);
  b.add(fk::one, -1, -1, -1, -1);

  for (int level = 1; level <= exhaustive_height; ++level) {
    const int before = (int)b.pool.nodes.size();
    for (int l = 0; l < before; ++l) {
      if (b.pool.height[l] >= level) continue;
      for (int r = 0; r < before; ++r) {
        if (b.pool.height[r] >= level) continue;
        if (b.pool.height[l] != level - 1 && b.pool.height[r] != level - 1) continue;
        for (fk kind : kBinaryKinds) b.add(kind, -1, -1, l, r);
      }
      if (b.pool.height[l] == level - 1)
        for (int m = 0; m < (int)modal_names.size(); ++m) b.add(fk::modal, -1, m, l, -1);
    }
  }
  b.pool.exhaustive.resize(b.pool.nodes.size());
  for (size_t i = 0; i < b.pool.exhaustive.size(); ++i) b.pool.exhaustive[i] = (int)i;

  std::mt19937_64 rng(seed);
  const int nkinds = 4 + (int)modal_names.size();
  // rng() % k keeps the stream identical across standard libraries
  auto roll = [&](int k) { return (int)(rng() % (uint64_t)k); };
  std::function<int(int)> gen = [&](int budget) -> int {
    int pick = budget == 0 ? nkinds : roll(nkinds + 2);
    if (pick >= nkinds) {
      switch (roll(4)) {
        case 0: return b.add(fk::var, 1, -1, -1, -1);
        case 1: return b.add(fk::var, 2, -1, -1, -1);
        case 2: return b.add(fk::zero, -1, -1, -1, -1);
        default: return b.add(fk::one, -1, -1, -1, -1);
      }
    }
    if (pick < 4) {
      int l = gen(budget - 1);
      int r = gen(budget - 1);
      return b.add(kBinaryKinds[pick], -1, -1, l, r);
    }
    return b.add(fk::modal, -1, pick - 4, gen(budget - 1), -1);
  };

  std::set<int> taken(b.pool.exhaustive.begin(), b.pool.exhaustive.end());
  long attempts = 0;
  const long attempt_cap = 200L * (seeded_count + 1);
  while ((int)b.pool.seeded.size() < seeded_count && attempts < attempt_cap) {
    ++attempts;
    int id = gen(seeded_height);
    if (taken.insert(id).second) b.pool.seeded.push_back(id);
  }
  if ((int)b.pool.seeded.size() < seeded_count)
    fail(errc::invalid, "random pool failed to reach the requested size");
  return b.pool;
}

}  // namespace gblx
