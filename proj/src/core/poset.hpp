#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gblx {

// Strict partial order on a small named carrier.  Only the strict relation
// is stored; it is transitively closed at construction and must come out
// irreflexive (a reflexive entry after closure means the input had a cycle).
struct finite_poset {
  std::string name;
  std::vector<std::string> elements;
  std::vector<uint8_t> lt;  // size() * size(), lt[x*n+y] == 1 iff x < y

  int size() const { return (int)elements.size(); }
  bool less(int x, int y) const { return lt[(size_t)x * elements.size() + y] != 0; }

  static finite_poset make(std::string name, std::vector<std::string> elements,
                           const std::vector<std::pair<int, int>>& strict_pairs);
};

}  // namespace gblx
