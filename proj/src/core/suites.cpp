#include "core/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "core/algebra.hpp"
#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/filters.hpp"
#include "core/formula_pool.hpp"
#include "core/posetprod.hpp"
#include "core/proofs.hpp"
#include "core/semantics.hpp"

namespace gblx {

namespace {

struct tally {
  suite_report& rep;
  template <typename F>
  void check(bool ok, F&& what) {
    ++rep.checked;
    if (!ok) {
      ++rep.failures;
      if (rep.first_failure.empty()) rep.first_failure = what();
    }
  }
};

bool name_has(const std::string& name, const std::string& filter) {
  return filter.empty() || name.find(filter) != std::string::npos;
}

// ---------------------------------------------------------------- tense lemma

void suite_tmv(suite_report& rep, const std::string& filter) {
  tally t{rep};
  for (const finite_algebra& a : default_corpus().tense) {
    if (!name_has(a.name, filter)) continue;
    t.check(classify(a).is_s4tmv, [&] { return a.name + ": not a tense algebra"; });
    const table1& g = a.find_modal("G")->map;
    const table1& h = a.find_modal("H")->map;
    table1 p = p_table(a), f = f_table(a);
    const int n = a.size();
    auto at = [&](idx x) { return a.carrier[x]; };

    for (idx x = 0; x < n; ++x) {
      t.check(a.impl_of(x, g[p[x]]) == a.one && a.impl_of(p[g[x]], x) == a.one,
              [&] { return a.name + ": G,P residuation units fail at " + at(x); });
      t.check(a.impl_of(x, h[f[x]]) == a.one && a.impl_of(f[h[x]], x) == a.one,
              [&] { return a.name + ": H,F residuation units fail at " + at(x); });
      t.check(a.leq(x, p[x]) && p[p[x]] == p[x],
              [&] { return a.name + ": P is not a closure operator at " + at(x); });
      t.check(a.leq(x, f[x]) && f[f[x]] == f[x],
              [&] { return a.name + ": F is not a closure operator at " + at(x); });
    }
    t.check(p[a.zero] == a.zero && p[a.one] == a.one,
            [&] { return a.name + ": P moves a bound"; });
    t.check(f[a.one] == a.one && f[a.zero] == a.zero,
            [&] { return a.name + ": F moves a bound"; });

    for (idx x = 0; x < n; ++x)
      for (idx y = 0; y < n; ++y) {
        t.check(p[a.join_of(x, y)] == a.join_of(p[x], p[y]),
                [&] { return a.name + ": P misses a join at (" + at(x) + "," + at(y) + ")"; });
        t.check(f[a.join_of(x, y)] == a.join_of(f[x], f[y]),
                [&] { return a.name + ": F misses a join at (" + at(x) + "," + at(y) + ")"; });
        t.check((a.leq(x, h[y])) == (a.leq(f[x], y)), [&] {
          return a.name + ": H,F adjunction fails at (" + at(x) + "," + at(y) + ")";
        });
        if (a.leq(x, y))
          t.check(a.leq(p[x], p[y]) && a.leq(f[x], f[y]),
                  [&] { return a.name + ": P or F not monotone at (" + at(x) + "," + at(y) + ")"; });
      }
  }
}

// ------------------------------------------------------- poset product lemma

void suite_poset_product(suite_report& rep, const std::string& filter) {
  tally t{rep};
  for (const labeled_product& lp : default_corpus().products) {
    const finite_algebra& a = lp.prod;
    if (!name_has(a.name, filter)) continue;
    const table1& s = lp.sigma;
    table1 hh = box_from_delta(lp);
    const int n = a.size();
    auto at = [&](idx x) { return a.carrier[x]; };

    t.check(s[a.zero] == a.zero && s[a.one] == a.one,
            [&] { return a.name + ": sigma moves a bound"; });
    t.check(hh[a.zero] == a.zero && hh[a.one] == a.one,
            [&] { return a.name + ": ~delta~ moves a bound"; });

    for (idx x = 0; x < n; ++x)
      t.check((s[x] == x) == lp.ac_labeling(x), [&] {
        return a.name + ": sigma fixpoints and antichain labelings disagree at " + at(x);
      });

    for (idx x = 0; x < n; ++x)
      for (idx y = 0; y < n; ++y) {
        t.check(s[a.meet_of(x, y)] == a.meet_of(s[x], s[y]) &&
                    s[a.mult_of(x, y)] == a.mult_of(s[x], s[y]),
                [&] {
                  return a.name + ": sigma is not an endomorphism at (" + at(x) + "," +
                         at(y) + ")";
                });
        t.check(hh[a.meet_of(x, y)] == a.meet_of(hh[x], hh[y]) &&
                    hh[a.mult_of(x, y)] == a.mult_of(hh[x], hh[y]),
                [&] {
                  return a.name + ": ~delta~ is not an endomorphism at (" + at(x) + "," +
                         at(y) + ")";
                });
        t.check((a.leq(x, s[y])) == (a.leq(lp.delta[x], y)), [&] {
          return a.name + ": sigma,delta adjunction fails at (" + at(x) + "," + at(y) + ")";
        });
      }
  }
}

// ---------------------------------------------------------- conucleus images

void suite_conucleus(suite_report& rep, const std::string& filter) {
  tally t{rep};
  const corpus& c = default_corpus();
  auto run = [&](const finite_algebra& a, const std::string& modal) {
    if (!name_has(a.name, filter)) return;
    rl_report con = check_conucleus(a, modal);
    t.check(con.pass, [&] {
      return a.name + ": " + modal + " is not a conucleus (" +
             (con.first ? con.first->law : std::string("?")) + ")";
    });
    if (!con.pass) return;
    interior_image img = conucleus_image(a, modal);
    class_report cls = classify(img.algebra);
    t.check(cls.is_gbl, [&] {
      return a.name + ": image under " + modal + " is not divisible (" +
             (cls.first_counterexample ? cls.first_counterexample->law : std::string("?")) +
             ")";
    });
  };
  for (const finite_algebra& a : c.boxed) run(a, "box");
  for (const finite_algebra& a : c.tense) run(a, "G");
}

// -------------------------------------------------- congruence/filter bridge

bool subset_leq(const subset& f, const subset& g) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] && !g[i]) return false;
  return true;
}

void suite_con_fi(suite_report& rep, const std::string& filter) {
  tally t{rep};
  const corpus& c = default_corpus();
  std::vector<const finite_algebra*> all;
  for (const auto& a : c.plain) all.push_back(&a);
  for (const auto& a : c.boxed) all.push_back(&a);
  for (const auto& a : c.tense) all.push_back(&a);
  for (const finite_algebra* ap : all) {
    const finite_algebra& a = *ap;
    if (a.size() > 8 || !name_has(a.name, filter)) continue;

    std::vector<partition> cons = enumerate_congruences(a);
    std::vector<subset> fils = enumerate_ifilters(a);
    t.check(cons.size() == fils.size(), [&] {
      return a.name + ": " + std::to_string(cons.size()) + " congruences vs " +
             std::to_string(fils.size()) + " filters";
    });

    for (const partition& th : cons) {
      subset f = congruence_to_filter(a, th);
      t.check(std::find(fils.begin(), fils.end(), f) != fils.end(),
              [&] { return a.name + ": class of 1 is not an enumerated filter"; });
      t.check(filter_to_congruence(a, f) == th,
              [&] { return a.name + ": congruence round-trip is not the identity"; });
    }
    for (const subset& f : fils) {
      partition th = filter_to_congruence(a, f);
      t.check(std::find(cons.begin(), cons.end(), th) != cons.end(),
              [&] { return a.name + ": induced congruence is not enumerated"; });
      t.check(congruence_to_filter(a, th) == f,
              [&] { return a.name + ": filter round-trip is not the identity"; });
    }
    for (const subset& f1 : fils)
      for (const subset& f2 : fils) {
        partition t1 = filter_to_congruence(a, f1), t2 = filter_to_congruence(a, f2);
        t.check(subset_leq(f1, f2) == partition_refines(t1, t2),
                [&] { return a.name + ": the bijection does not preserve order"; });
      }
    for (idx x = 0; x < a.size(); ++x)
      for (idx y = 0; y < a.size(); ++y) {
        subset lhs = congruence_to_filter(a, principal_congruence(a, x, y));
        subset rhs = generate_filter(
            a, {(idx)a.mult_of(a.impl_of(x, y), a.impl_of(y, x))});
        t.check(lhs == rhs, [&] {
          return a.name + ": principal congruence filter mismatch at (" + a.carrier[x] +
                 "," + a.carrier[y] + ")";
        });
      }
  }
}

// ------------------------------------------------------------------- CEP

std::vector<idx> subuniverse(const finite_algebra& a, std::vector<idx> seed) {
  std::vector<uint8_t> in(a.size(), 0);
  for (idx x : seed) in[x] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (idx x = 0; x < a.size(); ++x) {
      if (!in[x]) continue;
      for (idx y = 0; y < a.size(); ++y) {
        if (!in[y]) continue;
        for (idx z : {a.meet_of(x, y), a.join_of(x, y), a.mult_of(x, y), a.impl_of(x, y)})
          if (!in[z]) { in[z] = 1; grew = true; }
      }
      for (const auto& m : a.modals)
        if (!in[m.map[x]]) { in[m.map[x]] = 1; grew = true; }
    }
  }
  std::vector<idx> out;
  for (idx x = 0; x < a.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

finite_algebra restrict_to(const finite_algebra& a, const std::vector<idx>& elems,
                           const std::string& name) {
  const int k = (int)elems.size();
  std::vector<int> pos(a.size(), -1);
  for (int i = 0; i < k; ++i) pos[elems[i]] = i;
  finite_algebra sub;
  sub.name = name;
  for (idx e : elems) sub.carrier.push_back(a.carrier[e]);
  auto fill = [&](const table2& big, table2& small) {
    small.resize((size_t)k * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) small[i * k + j] = (uint16_t)pos[big[elems[i] * a.size() + elems[j]]];
  };
  fill(a.meet, sub.meet);
  fill(a.join, sub.join);
  fill(a.mult, sub.mult);
  fill(a.impl, sub.impl);
  sub.zero = pos[a.zero];
  sub.one = pos[a.one];
  for (const auto& m : a.modals) {
    modal_op op{m.name, table1(k)};
    for (int i = 0; i < k; ++i) op.map[i] = (uint16_t)pos[m.map[elems[i]]];
    sub.modals.push_back(std::move(op));
  }
  return sub;
}

void suite_cep(suite_report& rep, const std::string& filter) {
  tally t{rep};
  const corpus& c = default_corpus();
  std::vector<const finite_algebra*> ambients;
  for (const auto& a : c.boxed) ambients.push_back(&a);
  for (const auto& a : c.tense) ambients.push_back(&a);
  for (const finite_algebra* ap : ambients) {
    const finite_algebra& amb = *ap;
    if (amb.size() > 8 || !name_has(amb.name, filter)) continue;
    std::set<std::vector<idx>> seen;
    for (idx x = 0; x < amb.size(); ++x) {
      std::vector<idx> elems = subuniverse(amb, {amb.zero, amb.one, x});
      if ((int)elems.size() > 4 || !seen.insert(elems).second) continue;
      finite_algebra sub = restrict_to(amb, elems, amb.name + ".sub(" + amb.carrier[x] + ")");
      cep_report cr = check_cep(sub, amb, elems);
      t.check(cr.pass && cr.filters_checked >= 1, [&] {
        return sub.name + " inside " + amb.name + ": a filter is not the trace of its extension";
      });
    }
  }
}

// ------------------------------------------------------------------ LDDT

std::vector<std::vector<idx>> small_subsets(int n) {
  std::vector<std::vector<idx>> out{{}};
  for (idx i = 0; i < n; ++i) out.push_back({i});
  for (idx i = 0; i < n; ++i)
    for (idx j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

void suite_lddt(suite_report& rep, const std::string& filter) {
  tally t{rep};
  const corpus& c = default_corpus();
  auto run = [&](const finite_algebra& a, bool single_box) {
    if (a.size() > 6 || !name_has(a.name, filter)) return;
    auto subsets = small_subsets(a.size());
    for (const auto& gamma : subsets)
      for (const auto& delta : subsets) {
        std::vector<idx> both = gamma;
        both.insert(both.end(), delta.begin(), delta.end());
        subset fg_gamma = generate_filter(a, gamma);
        subset fg_both = generate_filter(a, both);
        for (idx psi = 0; psi < a.size(); ++psi) {
          lddt_report lr = lddt_witness(a, {gamma, delta, psi}, single_box);
          bool member = fg_both[psi] != 0;
          bool ok = member ? lr.status == lddt_status::witness
                           : lr.status == lddt_status::no_witness;
          if (ok && member) {
            // replay the witness against the raw tables
            idx v = a.one;
            for (const auto& fac : lr.factors) {
              if (single_box && fac.block != std::vector<int>{0}) ok = false;
              if (!a.modals.empty() && fac.block.empty()) ok = false;
              if (std::find(delta.begin(), delta.end(), fac.element) == delta.end())
                ok = false;
              idx e = fac.element;
              for (size_t k = fac.block.size(); k-- > 0;) e = a.modals[fac.block[k]].map[e];
              v = a.mult_of(v, e);
            }
            if (ok) ok = fg_gamma[a.impl_of(v, psi)] != 0;
          }
          t.check(ok, [&] {
            return a.name + ": deduction witness mismatch at psi=" + a.carrier[psi];
          });
        }
      }
  };
  for (const finite_algebra& a : c.boxed) run(a, true);
  for (const finite_algebra& a : c.tense) run(a, false);
}

// ---------------------------------------------------------- translations

void translation_suite(suite_report& rep, bool tense_mode, uint64_t seed,
                       const std::string& filter) {
  tally t{rep};
  const corpus& c = default_corpus();
  formula_pool pool = build_pool({}, 2, 200, 5, seed);
  const size_t nnodes = pool.nodes.size();
  std::vector<uint16_t> iv, pv;

  for (const finite_algebra& a : (tense_mode ? c.tense : c.boxed)) {
    if (!name_has(a.name, filter)) continue;
    const std::string modal = tense_mode ? "G" : "box";
    class_report cls = classify(a);
    t.check(tense_mode ? cls.is_s4tmv : cls.is_s4mv,
            [&] { return a.name + ": wrong class for this translation"; });
    const table1& g = a.find_modal(modal)->map;
    interior_image img = conucleus_image(a, modal);
    const finite_algebra& b = img.algebra;
    const int n = a.size(), m = b.size();

    // One-step closure checks: with these, the pointwise, validity, and
    // fixedness properties extend from the pool to all pure formulas.
    for (idx v = 0; v < n; ++v)
      t.check(g[g[v]] == g[v] && img.from_parent[g[v]] >= 0,
              [&] { return a.name + ": composing with " + modal + " leaves the image"; });
    t.check(img.to_parent[b.zero] == a.zero && img.to_parent[b.one] == a.one,
            [&] { return a.name + ": image bounds differ from the parent bounds"; });
    for (idx i = 0; i < m; ++i)
      for (idx j = 0; j < m; ++j) {
        idx u = img.to_parent[i], v = img.to_parent[j];
        t.check(img.to_parent[b.meet_of(i, j)] == a.meet_of(u, v) &&
                    img.to_parent[b.join_of(i, j)] == a.join_of(u, v) &&
                    img.to_parent[b.mult_of(i, j)] == a.mult_of(u, v) &&
                    img.to_parent[b.impl_of(i, j)] == g[a.impl_of(u, v)],
                [&] {
                  return a.name + ": image operation and translated operation differ at (" +
                         a.carrier[u] + "," + a.carrier[v] + ")";
                });
      }

    const int nass = n * n;
    iv.assign(nnodes * nass, 0);
    pv.assign(nnodes * nass, 0);
    for (size_t id = 0; id < nnodes; ++id) {
      const pool_node& nd = pool.nodes[id];
      uint16_t* ivp = iv.data() + id * nass;
      uint16_t* pvp = pv.data() + id * nass;
      switch (nd.kind) {
        case fk::var:
          for (int k = 0; k < nass; ++k) {
            idx h = nd.var == 1 ? k / n : k % n;
            ivp[k] = (uint16_t)img.from_parent[g[h]];
            pvp[k] = g[h];
          }
          break;
        case fk::zero:
          for (int k = 0; k < nass; ++k) { ivp[k] = (uint16_t)b.zero; pvp[k] = (uint16_t)a.zero; }
          break;
        case fk::one:
          for (int k = 0; k < nass; ++k) { ivp[k] = (uint16_t)b.one; pvp[k] = (uint16_t)a.one; }
          break;
        case fk::modal:
          fail(errc::invalid, "translation pool must be modal-free");
        default: {
          const uint16_t* la = iv.data() + nd.lhs * nass;
          const uint16_t* ra = iv.data() + nd.rhs * nass;
          const uint16_t* lb = pv.data() + nd.lhs * nass;
          const uint16_t* rb = pv.data() + nd.rhs * nass;
          const table2& bt = nd.kind == fk::meet   ? b.meet
                             : nd.kind == fk::join ? b.join
                             : nd.kind == fk::fuse ? b.mult
                                                   : b.impl;
          const table2& at = nd.kind == fk::meet   ? a.meet
                             : nd.kind == fk::join ? a.join
                             : nd.kind == fk::fuse ? a.mult
                                                   : a.impl;
          if (nd.kind == fk::imp)
            for (int k = 0; k < nass; ++k) {
              ivp[k] = bt[la[k] * m + ra[k]];
              pvp[k] = g[at[lb[k] * n + rb[k]]];
            }
          else
            for (int k = 0; k < nass; ++k) {
              ivp[k] = bt[la[k] * m + ra[k]];
              pvp[k] = at[lb[k] * n + rb[k]];
            }
        }
      }
      bool pointwise = true, fixed = true, img_one = true, par_one = true;
      for (int k = 0; k < nass; ++k) {
        if (img.to_parent[ivp[k]] != pvp[k]) pointwise = false;
        if (g[pvp[k]] != pvp[k]) fixed = false;
        if (ivp[k] != b.one) img_one = false;
        if (pvp[k] != a.one) par_one = false;
      }
      auto where = [&] { return a.name + ": " + print(pool.to_formula((int)id)); };
      t.check(pointwise, [&] { return where() + " evaluates differently through the image"; });
      t.check(fixed, [&] { return where() + " translates to a non-fixpoint"; });
      t.check(img_one == par_one, [&] { return where() + " breaks validity equivalence"; });
    }

    // tie the table sweep to the tree evaluator and the actual translators
    std::vector<int> sample;
    for (int i = 0; i < 25 && i < (int)pool.exhaustive.size(); ++i)
      sample.push_back(pool.exhaustive[i]);
    for (int i = 0; i < 25 && i < (int)pool.seeded.size(); ++i)
      sample.push_back(pool.seeded[i]);
    for (int id : sample) {
      fptr f = pool.to_formula(id);
      fptr tf = tense_mode ? translate_t(f) : relabel_modal(translate_m(f), "box", modal);
      bool agree = true;
      for (int k = 0; k < nass && agree; ++k) {
        assignment h{{1, 2}, {k / n, k % n}};
        assignment hbar{{1, 2},
                        {img.from_parent[g[k / n]], img.from_parent[g[k % n]]}};
        if (evaluate(a, h, tf) != pv[(size_t)id * nass + k] ||
            evaluate(b, hbar, f) != iv[(size_t)id * nass + k])
          agree = false;
      }
      t.check(agree, [&] {
        return a.name + ": evaluator and table sweep disagree on " + print(pool.to_formula(id));
      });
    }
  }
}

// ------------------------------------------------------- scheme soundness

void suite_schemes(suite_report& rep, const std::string& filter) {
  tally t{rep};
  const corpus& c = default_corpus();
  substitution distinct;
  distinct.map = {formula::mk_var(1), formula::mk_var(2), formula::mk_var(3)};

  struct row {
    const char* preset;
    const std::vector<finite_algebra>* group;
  };
  const row rows[] = {
      {"GBL", &c.plain},    {"BL", &c.plain},  {"L", &c.plain}, {"L(I)", &c.boxed},
      {"S4L(I)", &c.boxed}, {"S4L", &c.boxed}, {"S4tL", &c.tense},
  };
  for (const row& r : rows) {
    logic_preset lp = make_preset(r.preset);
    auto instances = preset_axiom_instances(lp);
    for (const finite_algebra& a : *r.group) {
      if (!name_has(a.name, filter)) continue;
      for (const auto& [scheme, modal] : instances) {
        fptr inst = instantiate(scheme, distinct, modal);
        validity_report vr = is_valid(a, {inst, formula::mk_one()});
        t.check(vr.valid, [&] {
          return std::string(lp.name) + " scheme " + scheme_name(scheme) +
                 (modal.empty() ? "" : " " + modal) + " fails on " + a.name;
        });
      }
      bool mp_ok = true;
      for (idx x = 0; x < a.size() && mp_ok; ++x)
        for (idx y = 0; y < a.size(); ++y)
          if (x == a.one && a.impl_of(x, y) == a.one && y != a.one) { mp_ok = false; break; }
      t.check(mp_ok, [&] { return a.name + ": modus ponens is unsound"; });
      if (lp.has_nec)
        for (const auto& m : a.modals)
          t.check(m.map[a.one] == a.one,
                  [&] { return a.name + ": necessitation is unsound for " + m.name; });
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"lemma-tmv-identities", "poset-product-lemma", "conucleus-gbl",
          "con-fi-iso",           "cep",                 "lddt",
          "translation-M",        "translation-T",       "scheme-soundness"};
}

suite_report run_suite(const std::string& name, uint64_t seed, const std::string& filter) {
  suite_report rep;
  rep.name = name;
  rep.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  if (name == "lemma-tmv-identities") suite_tmv(rep, filter);
  else if (name == "poset-product-lemma") suite_poset_product(rep, filter);
  else if (name == "conucleus-gbl") suite_conucleus(rep, filter);
  else if (name == "con-fi-iso") suite_con_fi(rep, filter);
  else if (name == "cep") suite_cep(rep, filter);
  else if (name == "lddt") suite_lddt(rep, filter);
  else if (name == "translation-M") translation_suite(rep, false, seed, filter);
  else if (name == "translation-T") translation_suite(rep, true, seed, filter);
  else if (name == "scheme-soundness") suite_schemes(rep, filter);
  else fail(errc::not_found, "unknown suite '" + name + "'");
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace gblx
