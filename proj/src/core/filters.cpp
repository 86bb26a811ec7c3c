#include "core/filters.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "core/config.hpp"
#include "core/error.hpp"

namespace gblx {

std::optional<law_failure> ifilter_violation(const finite_algebra& a, const subset& s) {
  if (s.size() != (size_t)a.size()) fail(errc::invalid, "subset size mismatch");
  bool empty = true;
  for (auto b : s)
    if (b) { empty = false; break; }
  if (empty) return law_failure{"filter-nonempty", {}};
  for (idx x = 0; x < a.size(); ++x)
    if (s[x])
      for (idx y = 0; y < a.size(); ++y)
        if (a.leq(x, y) && !s[y]) return law_failure{"filter-upward", {x, y}};
  for (idx x = 0; x < a.size(); ++x)
    if (s[x])
      for (idx y = 0; y < a.size(); ++y)
        if (s[y] && !s[a.mult_of(x, y)]) return law_failure{"filter-mult", {x, y}};
  for (const auto& m : a.modals)
    for (idx x = 0; x < a.size(); ++x)
      if (s[x] && !s[m.map[x]]) return law_failure{"filter-modal:" + m.name, {x}};
  return std::nullopt;
}

bool is_ifilter(const finite_algebra& a, const subset& s) {
  return !ifilter_violation(a, s).has_value();
}

subset generate_filter(const finite_algebra& a, const std::vector<idx>& gens) {
  subset s(a.size(), 0);
  s[a.one] = 1;
  for (idx g : gens) {
    if (g < 0 || g >= a.size()) fail(errc::invalid, "generator out of range");
    s[g] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (idx x = 0; x < a.size(); ++x) {
      if (!s[x]) continue;
      for (idx y = 0; y < a.size(); ++y) {
        if (a.leq(x, y) && !s[y]) { s[y] = 1; changed = true; }
        if (s[y] && !s[a.mult_of(x, y)]) { s[a.mult_of(x, y)] = 1; changed = true; }
      }
      for (const auto& m : a.modals)
        if (!s[m.map[x]]) { s[m.map[x]] = 1; changed = true; }
    }
  }
  return s;
}

partition canonical_partition(const partition& labels) {
  partition out(labels.size(), -1);
  std::vector<int> keys;  // original label per new block id, discovery order
  for (size_t i = 0; i < labels.size(); ++i) {
    int id = -1;
    for (size_t k = 0; k < keys.size(); ++k)
      if (keys[k] == labels[i]) { id = (int)k; break; }
    if (id < 0) {
      id = (int)keys.size();
      keys.push_back(labels[i]);
    }
    out[i] = id;
  }
  return out;
}

bool partition_refines(const partition& p, const partition& q) {
  if (p.size() != q.size()) fail(errc::invalid, "partition size mismatch");
  // p <= q iff every p-block sits inside one q-block
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j] && q[i] != q[j]) return false;
  return true;
}

namespace {

struct union_find {
  std::vector<int> parent;
  explicit union_find(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns true if the classes were distinct
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    return true;
  }
  partition to_partition() {
    partition raw(parent.size());
    for (size_t i = 0; i < parent.size(); ++i) raw[i] = find((int)i);
    return canonical_partition(raw);
  }
};

}  // namespace

partition join_partitions(const partition& p, const partition& q) {
  if (p.size() != q.size()) fail(errc::invalid, "partition size mismatch");
  union_find uf((int)p.size());
  std::vector<int> first_p, first_q;
  for (size_t i = 0; i < p.size(); ++i) {
    while ((int)first_p.size() <= p[i]) first_p.push_back(-1);
    if (first_p[p[i]] < 0) first_p[p[i]] = (int)i;
    uf.unite(first_p[p[i]], (int)i);
    while ((int)first_q.size() <= q[i]) first_q.push_back(-1);
    if (first_q[q[i]] < 0) first_q[q[i]] = (int)i;
    uf.unite(first_q[q[i]], (int)i);
  }
  return uf.to_partition();
}

partition filter_to_congruence(const finite_algebra& a, const subset& f) {
  if (auto v = ifilter_violation(a, f))
    fail(errc::precondition, "not a filter: fails " + v->law);
  const int n = a.size();
  auto related = [&](idx x, idx y) {
    return f[a.mult_of(a.impl_of(x, y), a.impl_of(y, x))] != 0;
  };
  partition p(n, -1);
  int next = 0;
  for (idx x = 0; x < n; ++x) {
    for (idx y = 0; y < x; ++y)
      if (related(x, y)) { p[x] = p[y]; break; }
    if (p[x] < 0) p[x] = next++;
  }
  // the relation must coincide with the partition it spawned, otherwise it
  // was not transitive in the first place
  for (idx x = 0; x < n; ++x)
    for (idx y = 0; y < n; ++y)
      if (related(x, y) != (p[x] == p[y]))
        fail(errc::invalid, "filter relation is not an equivalence at (" + a.carrier[x] +
                                "," + a.carrier[y] + ")");
  return canonical_partition(p);
}

namespace {

void require_congruence(const finite_algebra& a, const partition& th) {
  if (th.size() != (size_t)a.size()) fail(errc::invalid, "partition size mismatch");
  const int n = a.size();
  auto same = [&](idx x, idx y) { return th[x] == th[y]; };
  for (idx x = 0; x < n; ++x)
    for (idx y = 0; y < n; ++y) {
      if (!same(x, y)) continue;
      for (idx z = 0; z < n; ++z) {
        if (!same(a.meet_of(x, z), a.meet_of(y, z)) ||
            !same(a.join_of(x, z), a.join_of(y, z)) ||
            !same(a.mult_of(x, z), a.mult_of(y, z)) ||
            !same(a.impl_of(x, z), a.impl_of(y, z)) ||
            !same(a.impl_of(z, x), a.impl_of(z, y)))
          fail(errc::precondition, "partition is not a congruence at (" + a.carrier[x] + "," +
                                       a.carrier[y] + ")");
      }
      for (const auto& m : a.modals)
        if (!same(m.map[x], m.map[y]))
          fail(errc::precondition, "partition is not a congruence at (" + a.carrier[x] + "," +
                                       a.carrier[y] + ") under " + m.name);
    }
}

}  // namespace

subset congruence_to_filter(const finite_algebra& a, const partition& th) {
  require_congruence(a, th);
  subset s(a.size(), 0);
  for (idx x = 0; x < a.size(); ++x)
    if (th[x] == th[a.one]) s[x] = 1;
  return s;
}

partition principal_congruence(const finite_algebra& a, idx x, idx y) {
  const int n = a.size();
  if (x < 0 || x >= n || y < 0 || y >= n) fail(errc::invalid, "element out of range");
  union_find uf(n);
  std::vector<std::pair<idx, idx>> work;
  auto merge = [&](idx u, idx v) {
    if (uf.unite(u, v)) work.emplace_back(u, v);
  };
  merge(x, y);
  // Propagating each merge through every table once suffices: later
  // identifications compose transitively with the ones already processed.
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    for (idx z = 0; z < n; ++z) {
      merge(a.meet_of(u, z), a.meet_of(v, z));
      merge(a.join_of(u, z), a.join_of(v, z));
      merge(a.mult_of(u, z), a.mult_of(v, z));
      merge(a.impl_of(u, z), a.impl_of(v, z));
      merge(a.impl_of(z, u), a.impl_of(z, v));
    }
    for (const auto& m : a.modals) merge(m.map[u], m.map[v]);
  }
  return uf.to_partition();
}

std::vector<partition> enumerate_congruences(const finite_algebra& a) {
  a.validate_shape();
  const int n = a.size();
  std::set<partition> principals;
  for (idx x = 0; x < n; ++x)
    for (idx y = x + 1; y < n; ++y) principals.insert(principal_congruence(a, x, y));

  partition diagonal(n);
  std::iota(diagonal.begin(), diagonal.end(), 0);
  std::set<partition> all{diagonal};
  std::vector<partition> frontier{diagonal};
  while (!frontier.empty()) {
    std::vector<partition> next;
    for (const auto& th : frontier)
      for (const auto& pc : principals) {
        partition j = join_partitions(th, pc);
        if (all.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

std::vector<subset> enumerate_ifilters(const finite_algebra& a) {
  a.validate_shape();
  const int n = a.size();
  if (n > 16)
    fail(errc::cap, "filter enumeration is capped at 16 elements, algebra has " +
                        std::to_string(n));
  std::set<subset> out;
  std::vector<idx> gens;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    gens.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1ul << i)) gens.push_back(i);
    out.insert(generate_filter(a, gens));
  }
  return {out.begin(), out.end()};
}

cep_report check_cep(const finite_algebra& sub, const finite_algebra& amb,
                     const std::vector<idx>& embed) {
  sub.validate_shape();
  amb.validate_shape();
  if (embed.size() != (size_t)sub.size())
    fail(errc::invalid, "embedding must list one image per subalgebra element");
  std::vector<uint8_t> hit(amb.size(), 0);
  for (idx v : embed) {
    if (v < 0 || v >= amb.size()) fail(errc::invalid, "embedding image out of range");
    if (hit[v]) fail(errc::invalid, "embedding is not injective");
    hit[v] = 1;
  }
  if (embed[sub.zero] != amb.zero || embed[sub.one] != amb.one)
    fail(errc::invalid, "embedding does not preserve the bounds");
  for (idx x = 0; x < sub.size(); ++x)
    for (idx y = 0; y < sub.size(); ++y) {
      if (embed[sub.meet_of(x, y)] != amb.meet_of(embed[x], embed[y]) ||
          embed[sub.join_of(x, y)] != amb.join_of(embed[x], embed[y]) ||
          embed[sub.mult_of(x, y)] != amb.mult_of(embed[x], embed[y]) ||
          embed[sub.impl_of(x, y)] != amb.impl_of(embed[x], embed[y]))
        fail(errc::invalid, "embedding does not commute with the tables at (" +
                                sub.carrier[x] + "," + sub.carrier[y] + ")");
    }
  {
    auto sn = sub.modal_name_list();
    auto an = amb.modal_name_list();
    std::sort(sn.begin(), sn.end());
    std::sort(an.begin(), an.end());
    if (sn != an) fail(errc::invalid, "modal signatures differ");
  }
  for (const auto& m : sub.modals) {
    const auto& am = amb.find_modal(m.name)->map;
    for (idx x = 0; x < sub.size(); ++x)
      if (embed[m.map[x]] != am[embed[x]])
        fail(errc::invalid, "embedding does not commute with modal " + m.name);
  }

  cep_report rep;
  for (const auto& f : enumerate_ifilters(sub)) {
    ++rep.filters_checked;
    std::vector<idx> image;
    for (idx x = 0; x < sub.size(); ++x)
      if (f[x]) image.push_back(embed[x]);
    subset g = generate_filter(amb, image);
    for (idx x = 0; x < sub.size(); ++x)
      if ((g[embed[x]] != 0) != (f[x] != 0)) {
        rep.pass = false;
        rep.witness = {f, x};
        return rep;
      }
  }
  return rep;
}

idx lambda_power(const finite_algebra& a, idx x, int m) {
  if (x < 0 || x >= a.size()) fail(errc::invalid, "element out of range");
  if (m < 0) fail(errc::invalid, "negative iteration count");
  if (m == 0) return x;
  table1 lam = lambda_table(a);  // throws precondition if there are no modals
  idx v = x;
  for (int i = 0; i < m; ++i) v = lam[v];
  return v;
}

namespace {

idx apply_block(const finite_algebra& a, const std::vector<int>& block, idx x) {
  idx v = x;
  for (size_t k = block.size(); k-- > 0;) v = a.modals[block[k]].map[v];
  return v;
}

// Enumerate nondecreasing index sequences of the given length (multisets)
// over pool size `m`; calls fn for each, stops early when fn returns true.
template <typename Fn>
bool for_multisets(int m, int length, std::vector<int>& seq, int from, Fn&& fn) {
  if ((int)seq.size() == length) return fn(seq);
  for (int i = from; i < m; ++i) {
    seq.push_back(i);
    if (for_multisets(m, length, seq, i, fn)) return true;
    seq.pop_back();
  }
  return false;
}

}  // namespace

lddt_report lddt_witness(const finite_algebra& a, const lddt_query& q, bool single_box) {
  a.validate_shape();
  for (idx e : q.gamma)
    if (e < 0 || e >= a.size()) fail(errc::invalid, "gamma element out of range");
  for (idx e : q.delta)
    if (e < 0 || e >= a.size()) fail(errc::invalid, "delta element out of range");
  if (q.psi < 0 || q.psi >= a.size()) fail(errc::invalid, "psi out of range");
  if (single_box && a.modals.size() != 1)
    fail(errc::precondition, "single-box preset needs exactly one modal");

  subset fg_gamma = generate_filter(a, q.gamma);
  std::vector<idx> both = q.gamma;
  both.insert(both.end(), q.delta.begin(), q.delta.end());
  subset fg_both = generate_filter(a, both);

  lddt_report rep;
  rep.member = fg_both[q.psi] != 0;
  if (!rep.member) {
    rep.status = lddt_status::no_witness;
    return rep;
  }

  // block vocabulary, ordered by length then lexicographically
  std::vector<std::vector<int>> blocks;
  if (single_box) {
    blocks.push_back({0});
  } else if (a.modals.empty()) {
    blocks.push_back({});  // bare elements
  } else {
    const int nm = (int)a.modals.size();
    std::vector<std::vector<int>> level{{}};
    for (int len = 1; len <= global_caps().lddt_block_len; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : level)
        for (int i = 0; i < nm; ++i) {
          auto e = w;
          e.push_back(i);
          next.push_back(std::move(e));
        }
      for (const auto& w : next) blocks.push_back(w);
      level = std::move(next);
    }
  }

  // delta elements in ascending order for determinism
  std::vector<idx> delta = q.delta;
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());

  struct cand {
    std::vector<int> block;
    idx element;
    idx value;
  };
  std::vector<cand> pool;
  for (const auto& b : blocks)
    for (idx e : delta) pool.push_back({b, e, apply_block(a, b, e)});

  for (int len = 0; len <= global_caps().lddt_product_len; ++len) {
    std::vector<int> seq;
    bool found = for_multisets((int)pool.size(), len, seq, 0, [&](const std::vector<int>& s) {
      idx v = a.one;
      for (int i : s) v = a.mult_of(v, pool[i].value);
      idx im = a.impl_of(v, q.psi);
      if (!fg_gamma[im]) return false;
      rep.status = lddt_status::witness;
      rep.implication = im;
      for (int i : s) rep.factors.push_back({pool[i].block, pool[i].element});
      return true;
    });
    if (found) return rep;
  }
  rep.status = lddt_status::inconclusive;
  return rep;
}

}  // namespace gblx
