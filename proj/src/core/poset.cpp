#include "core/poset.hpp"

#include <set>

#include "core/config.hpp"
#include "core/error.hpp"

namespace gblx {

finite_poset finite_poset::make(std::string name, std::vector<std::string> elements,
                                const std::vector<std::pair<int, int>>& strict_pairs) {
  const int n = (int)elements.size();
  if (n == 0) fail(errc::invalid, "empty poset");
  if (n > global_caps().max_poset)
    fail(errc::cap, "poset exceeds the cap of " + std::to_string(global_caps().max_poset) +
                        " elements");
  {
    std::set<std::string> seen;
    for (const auto& e : elements)
      if (e.empty() || !seen.insert(e).second)
        fail(errc::invalid, "poset element names must be distinct and nonempty");
  }
  finite_poset p;
  p.name = std::move(name);
  p.elements = std::move(elements);
  p.lt.assign((size_t)n * n, 0);
  for (auto [x, y] : strict_pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      fail(errc::invalid, "lt pair (" + std::to_string(x) + "," + std::to_string(y) +
                              ") out of range");
    p.lt[(size_t)x * n + y] = 1;
  }
  // Warshall closure; a diagonal hit afterwards exposes a cycle (or a
  // self-loop in the input).
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (p.less(x, k))
        for (int y = 0; y < n; ++y)
          if (p.less(k, y)) p.lt[(size_t)x * n + y] = 1;
  for (int x = 0; x < n; ++x)
    if (p.less(x, x))
      fail(errc::invalid, "strict order has a cycle through '" + p.elements[x] + "'");
  return p;
}

}  // namespace gblx
