#include "core/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/formula.hpp"

namespace gblx {

const modal_op* finite_algebra::find_modal(const std::string& name) const {
  for (const auto& m : modals)
    if (m.name == name) return &m;
  return nullptr;
}

std::vector<std::string> finite_algebra::modal_name_list() const {
  std::vector<std::string> out;
  out.reserve(modals.size());
  for (const auto& m : modals) out.push_back(m.name);
  return out;
}

idx finite_algebra::element(const std::string& ename) const {
  for (int i = 0; i < size(); ++i)
    if (carrier[i] == ename) return i;
  fail(errc::not_found, "no element named '" + ename + "' in algebra " + name);
}

void finite_algebra::validate_shape() const {
  const size_t n = carrier.size();
  if (n == 0) fail(errc::invalid, "empty carrier");
  if (n > 65535) fail(errc::invalid, "carrier too large for table encoding");
  {
    std::set<std::string> seen;
    for (const auto& e : carrier)
      if (!seen.insert(e).second)
        fail(errc::invalid, "duplicate carrier name '" + e + "'");
  }
  auto check2 = [&](const table2& t, const char* which) {
    if (t.size() != n * n)
      fail(errc::invalid, std::string(which) + " table is not " + std::to_string(n) + "x" +
                              std::to_string(n));
    for (auto v : t)
      if (v >= n) fail(errc::invalid, std::string(which) + " entry out of range");
  };
  check2(meet, "meet");
  check2(join, "join");
  check2(mult, "mult");
  check2(impl, "impl");
  if (zero < 0 || (size_t)zero >= n) fail(errc::invalid, "zero out of range");
  if (one < 0 || (size_t)one >= n) fail(errc::invalid, "one out of range");
  validate_signature(modal_name_list());
  for (const auto& m : modals) {
    if (m.map.size() != n)
      fail(errc::invalid, "modal '" + m.name + "' table has wrong length");
    for (auto v : m.map)
      if (v >= n) fail(errc::invalid, "modal '" + m.name + "' entry out of range");
  }
}

namespace {

// Shared scaffolding for the exhaustive law sweeps.  Laws are checked in a
// fixed order and the first counterexample (ascending scan order, so the
// lexicographically least witness) wins.
struct law_checker {
  const finite_algebra& a;
  std::optional<law_failure> first;

  bool ok() const { return !first.has_value(); }

  void record(const char* name, std::vector<idx> w) {
    if (!first) first = law_failure{name, std::move(w)};
  }

  template <typename Fn>
  bool unary_law(const char* name, Fn&& holds) {
    for (idx x = 0; x < a.size(); ++x)
      if (!holds(x)) {
        record(name, {x});
        return false;
      }
    return true;
  }

  template <typename Fn>
  bool binary_law(const char* name, Fn&& holds) {
    for (idx x = 0; x < a.size(); ++x)
      for (idx y = 0; y < a.size(); ++y)
        if (!holds(x, y)) {
          record(name, {x, y});
          return false;
        }
    return true;
  }

  template <typename Fn>
  bool ternary_law(const char* name, Fn&& holds) {
    for (idx x = 0; x < a.size(); ++x)
      for (idx y = 0; y < a.size(); ++y)
        for (idx z = 0; z < a.size(); ++z)
          if (!holds(x, y, z)) {
            record(name, {x, y, z});
            return false;
          }
    return true;
  }
};

bool run_rl_laws(law_checker& c) {
  const finite_algebra& a = c.a;
  return
      c.unary_law("meet-idempotent", [&](idx x) { return a.meet_of(x, x) == x; }) &&
      c.binary_law("meet-commutative",
                   [&](idx x, idx y) { return a.meet_of(x, y) == a.meet_of(y, x); }) &&
      c.ternary_law("meet-associative",
                    [&](idx x, idx y, idx z) {
                      return a.meet_of(a.meet_of(x, y), z) == a.meet_of(x, a.meet_of(y, z));
                    }) &&
      c.unary_law("join-idempotent", [&](idx x) { return a.join_of(x, x) == x; }) &&
      c.binary_law("join-commutative",
                   [&](idx x, idx y) { return a.join_of(x, y) == a.join_of(y, x); }) &&
      c.ternary_law("join-associative",
                    [&](idx x, idx y, idx z) {
                      return a.join_of(a.join_of(x, y), z) == a.join_of(x, a.join_of(y, z));
                    }) &&
      c.binary_law("absorption-meet",
                   [&](idx x, idx y) { return a.meet_of(x, a.join_of(x, y)) == x; }) &&
      c.binary_law("absorption-join",
                   [&](idx x, idx y) { return a.join_of(x, a.meet_of(x, y)) == x; }) &&
      c.unary_law("zero-least", [&](idx x) { return a.join_of(a.zero, x) == x; }) &&
      c.unary_law("one-greatest", [&](idx x) { return a.meet_of(a.one, x) == x; }) &&
      c.binary_law("mult-commutative",
                   [&](idx x, idx y) { return a.mult_of(x, y) == a.mult_of(y, x); }) &&
      c.ternary_law("mult-associative",
                    [&](idx x, idx y, idx z) {
                      return a.mult_of(a.mult_of(x, y), z) == a.mult_of(x, a.mult_of(y, z));
                    }) &&
      c.unary_law("mult-unit", [&](idx x) { return a.mult_of(a.one, x) == x; }) &&
      c.ternary_law("residuation", [&](idx x, idx y, idx z) {
        return a.leq(a.mult_of(x, y), z) == a.leq(x, a.impl_of(y, z));
      });
}

}  // namespace

rl_report check_residuated_lattice(const finite_algebra& a) {
  a.validate_shape();
  law_checker c{a, {}};
  run_rl_laws(c);
  return {c.ok(), c.first};
}

class_report classify(const finite_algebra& a) {
  a.validate_shape();
  class_report r;
  law_checker c{a, {}};
  r.is_rl = run_rl_laws(c);
  if (!r.is_rl) {
    r.first_counterexample = c.first;
    return r;
  }

  law_checker cdiv{a, {}}, cpre{a, {}}, cinv{a, {}};
  bool div = cdiv.binary_law("divisibility", [&](idx x, idx y) {
    return a.mult_of(x, a.impl_of(x, y)) == a.meet_of(x, y);
  });
  bool prelin = cpre.binary_law("prelinearity", [&](idx x, idx y) {
    return a.join_of(a.impl_of(x, y), a.impl_of(y, x)) == a.one;
  });
  bool invol =
      cinv.unary_law("involution", [&](idx x) { return a.neg_of(a.neg_of(x)) == x; });

  r.is_gbl = div;
  r.is_bl = div && prelin;
  r.is_mv = r.is_bl && invol;

  auto note_failure = [&](const std::optional<law_failure>& f) {
    if (f && !r.first_counterexample) r.first_counterexample = f;
  };
  if (!div)
    note_failure(cdiv.first);
  else if (!prelin)
    note_failure(cpre.first);
  else if (!invol)
    note_failure(cinv.first);

  bool all_endo = true, all_interior = true;
  for (const auto& m : a.modals) {
    law_checker mc{a, {}};
    auto box = [&](idx x) { return (idx)m.map[x]; };
    bool endo =
        mc.binary_law("modal-meet",
                      [&](idx x, idx y) {
                        return box(a.meet_of(x, y)) == a.meet_of(box(x), box(y));
                      }) &&
        mc.binary_law("modal-mult",
                      [&](idx x, idx y) {
                        return box(a.mult_of(x, y)) == a.mult_of(box(x), box(y));
                      }) &&
        mc.unary_law("modal-zero", [&](idx) { return box(a.zero) == a.zero; }) &&
        mc.unary_law("modal-one", [&](idx) { return box(a.one) == a.one; });
    bool interior =
        mc.unary_law("modal-contracting", [&](idx x) { return a.leq(box(x), x); }) &&
        mc.unary_law("modal-idempotent", [&](idx x) { return box(box(x)) == box(x); }) &&
        mc.binary_law("modal-monotone", [&](idx x, idx y) {
          return !a.leq(x, y) || a.leq(box(x), box(y));
        });
    modal_flags mf{endo, interior, {}};
    if (mc.first) {
      mf.fail = law_failure{m.name + ":" + mc.first->law, mc.first->witness};
      note_failure(mf.fail);
    }
    r.modals.emplace_back(m.name, mf);
    all_endo = all_endo && endo;
    all_interior = all_interior && interior;
  }

  r.is_s4mv = r.is_mv && !a.modals.empty() && all_endo && all_interior;

  {
    auto names = a.modal_name_list();
    std::sort(names.begin(), names.end());
    r.tense_signature = names == std::vector<std::string>{"G", "H"};
  }
  if (r.is_s4mv && r.tense_signature) {
    table1 p = p_table(a), f = f_table(a);
    const table1& g = a.find_modal("G")->map;
    const table1& h = a.find_modal("H")->map;
    law_checker tc{a, {}};
    bool tense =
        tc.unary_law("tense-gp", [&](idx x) { return a.impl_of(x, g[p[x]]) == a.one; }) &&
        tc.unary_law("tense-hf", [&](idx x) { return a.impl_of(x, h[f[x]]) == a.one; });
    r.is_s4tmv = tense;
    note_failure(tc.first);
  }
  return r;
}

table2 derive_residuum(const finite_algebra& a) {
  const int n = a.size();
  table2 out((size_t)n * n);
  std::vector<idx> sat;
  for (idx y = 0; y < n; ++y)
    for (idx z = 0; z < n; ++z) {
      sat.clear();
      for (idx x = 0; x < n; ++x)
        if (a.leq(a.mult_of(x, y), z)) sat.push_back(x);
      if (sat.empty())
        fail(errc::invalid, "no residuum at (" + a.carrier[y] + "," + a.carrier[z] +
                                "): empty solution set");
      idx m = sat[0];
      for (idx x : sat) m = a.join_of(m, x);
      bool in = a.leq(a.mult_of(m, y), z);
      bool bound = true;
      for (idx x : sat)
        if (!a.leq(x, m)) { bound = false; break; }
      if (!in || !bound)
        fail(errc::invalid,
             "no residuum at (" + a.carrier[y] + "," + a.carrier[z] + "): no maximum");
      out[(size_t)y * n + z] = (uint16_t)m;
    }
  return out;
}

finite_algebra lukasiewicz_chain(int n) {
  if (n < 2) fail(errc::invalid, "chain needs at least two elements");
  if (n > 65535) fail(errc::invalid, "chain too large");
  finite_algebra a;
  a.name = "L" + std::to_string(n);
  a.carrier.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      a.carrier.push_back("0");
    else if (i == n - 1)
      a.carrier.push_back("1");
    else {
      int g = std::gcd(i, n - 1);
      a.carrier.push_back(std::to_string(i / g) + "/" + std::to_string((n - 1) / g));
    }
  }
  const size_t nn = (size_t)n * n;
  a.meet.resize(nn);
  a.join.resize(nn);
  a.mult.resize(nn);
  a.impl.resize(nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.meet[(size_t)i * n + j] = (uint16_t)std::min(i, j);
      a.join[(size_t)i * n + j] = (uint16_t)std::max(i, j);
      a.mult[(size_t)i * n + j] = (uint16_t)std::max(0, i + j - (n - 1));
      a.impl[(size_t)i * n + j] = (uint16_t)std::min(n - 1, n - 1 - i + j);
    }
  a.zero = 0;
  a.one = n - 1;
  return a;
}

std::vector<idx> tuple_of(long index, const std::vector<int>& sizes) {
  std::vector<idx> t(sizes.size());
  for (size_t k = sizes.size(); k-- > 0;) {
    t[k] = (idx)(index % sizes[k]);
    index /= sizes[k];
  }
  return t;
}

long tuple_index(const std::vector<idx>& t, const std::vector<int>& sizes) {
  long index = 0;
  for (size_t k = 0; k < sizes.size(); ++k) index = index * sizes[k] + t[k];
  return index;
}

finite_algebra direct_product(const std::vector<finite_algebra>& factors) {
  if (factors.empty()) fail(errc::invalid, "product of no factors");
  long n = 1;
  std::vector<int> sizes;
  for (const auto& f : factors) {
    f.validate_shape();
    sizes.push_back(f.size());
    n *= f.size();
    if (n > global_caps().max_product)
      fail(errc::cap, "product carrier would exceed " +
                          std::to_string(global_caps().max_product) + " elements");
  }
  const size_t m = factors.size();

  finite_algebra a;
  a.name = factors[0].name;
  for (size_t k = 1; k < m; ++k) a.name += "x" + factors[k].name;

  std::vector<std::vector<idx>> tuples((size_t)n);
  for (long i = 0; i < n; ++i) {
    tuples[i] = tuple_of(i, sizes);
    std::string e = "(";
    for (size_t k = 0; k < m; ++k) {
      if (k) e += ",";
      e += factors[k].carrier[tuples[i][k]];
    }
    e += ")";
    a.carrier.push_back(e);
  }

  const size_t nn = (size_t)n * n;
  a.meet.resize(nn);
  a.join.resize(nn);
  a.mult.resize(nn);
  a.impl.resize(nn);
  std::vector<idx> t(m);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const auto& ti = tuples[i];
      const auto& tj = tuples[j];
      auto fill = [&](table2& dst, table2 finite_algebra::*src) {
        for (size_t k = 0; k < m; ++k)
          t[k] = (factors[k].*src)[(size_t)ti[k] * sizes[k] + tj[k]];
        dst[(size_t)i * n + j] = (uint16_t)tuple_index(t, sizes);
      };
      fill(a.meet, &finite_algebra::meet);
      fill(a.join, &finite_algebra::join);
      fill(a.mult, &finite_algebra::mult);
      fill(a.impl, &finite_algebra::impl);
    }

  std::vector<idx> zt(m), ot(m);
  for (size_t k = 0; k < m; ++k) {
    zt[k] = factors[k].zero;
    ot[k] = factors[k].one;
  }
  a.zero = (idx)tuple_index(zt, sizes);
  a.one = (idx)tuple_index(ot, sizes);

  // a modal survives into the product iff every factor declares it
  for (const auto& m0 : factors[0].modals) {
    bool everywhere = true;
    for (size_t k = 1; k < m; ++k)
      if (!factors[k].has_modal(m0.name)) { everywhere = false; break; }
    if (!everywhere) continue;
    modal_op op{m0.name, table1((size_t)n)};
    for (long i = 0; i < n; ++i) {
      for (size_t k = 0; k < m; ++k)
        t[k] = factors[k].find_modal(m0.name)->map[tuples[i][k]];
      op.map[i] = (uint16_t)tuple_index(t, sizes);
    }
    a.modals.push_back(std::move(op));
  }
  return a;
}

finite_algebra with_identity_modal(finite_algebra a, const std::string& name) {
  auto names = a.modal_name_list();
  names.push_back(name);
  validate_signature(names);
  modal_op op{name, table1(a.size())};
  for (int i = 0; i < a.size(); ++i) op.map[i] = (uint16_t)i;
  a.modals.push_back(std::move(op));
  return a;
}

table1 conjugate_by_neg(const finite_algebra& a, const table1& g) {
  table1 out(a.size());
  for (idx x = 0; x < a.size(); ++x) out[x] = (uint16_t)a.neg_of(g[a.neg_of(x)]);
  return out;
}

table1 p_table(const finite_algebra& a) {
  const modal_op* h = a.find_modal("H");
  if (!h) fail(errc::precondition, "P table needs modal H");
  return conjugate_by_neg(a, h->map);
}

table1 f_table(const finite_algebra& a) {
  const modal_op* g = a.find_modal("G");
  if (!g) fail(errc::precondition, "F table needs modal G");
  return conjugate_by_neg(a, g->map);
}

table1 lambda_table(const finite_algebra& a) {
  if (a.modals.empty()) fail(errc::precondition, "lambda needs at least one modal");
  table1 out(a.size());
  for (idx x = 0; x < a.size(); ++x) {
    idx v = a.modals[0].map[x];
    for (size_t k = 1; k < a.modals.size(); ++k) v = a.mult_of(v, a.modals[k].map[x]);
    out[x] = (uint16_t)v;
  }
  return out;
}

}  // namespace gblx
