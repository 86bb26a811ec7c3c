#include "core/posetprod.hpp"

#include <utility>

#include "core/error.hpp"

namespace gblx {

labeled_product labeled_product::build(finite_poset p, std::vector<finite_algebra> fs) {
  if ((size_t)p.size() != fs.size())
    fail(errc::invalid, "need exactly one factor per poset element (" +
                            std::to_string(p.size()) + " required, " +
                            std::to_string(fs.size()) + " given)");
  for (size_t k = 0; k < fs.size(); ++k) {
    auto r = check_residuated_lattice(fs[k]);
    if (!r.pass)
      fail(errc::precondition, "factor " + std::to_string(k) + " (" + fs[k].name +
                                   ") fails " + r.first->law);
  }

  labeled_product lp;
  lp.poset = std::move(p);
  lp.factors = std::move(fs);
  lp.prod = direct_product(lp.factors);
  lp.prod.modals.clear();
  {
    std::string nm = "pp(" + (lp.poset.name.empty() ? "poset" : lp.poset.name) + ";";
    for (size_t k = 0; k < lp.factors.size(); ++k) {
      if (k) nm += ",";
      nm += lp.factors[k].name;
    }
    lp.prod.name = nm + ")";
  }

  const int n = lp.prod.size();
  const int m = lp.poset.size();
  std::vector<int> sizes;
  for (const auto& f : lp.factors) sizes.push_back(f.size());
  lp.tuples.reserve(n);
  for (long i = 0; i < n; ++i) lp.tuples.push_back(tuple_of(i, sizes));

  lp.sigma.resize(n);
  lp.delta.resize(n);
  std::vector<idx> s(m);
  for (idx i = 0; i < n; ++i) {
    const auto& t = lp.tuples[i];
    for (int x = 0; x < m; ++x) {
      bool above_all_one = true;
      for (int y = 0; y < m; ++y)
        if (lp.poset.less(x, y) && t[y] != lp.factors[y].one) {
          above_all_one = false;
          break;
        }
      s[x] = above_all_one ? t[x] : lp.factors[x].zero;
    }
    lp.sigma[i] = (uint16_t)tuple_index(s, sizes);
    for (int x = 0; x < m; ++x) {
      bool below_all_zero = true;
      for (int y = 0; y < m; ++y)
        if (lp.poset.less(y, x) && t[y] != lp.factors[y].zero) {
          below_all_zero = false;
          break;
        }
      s[x] = below_all_zero ? t[x] : lp.factors[x].one;
    }
    lp.delta[i] = (uint16_t)tuple_index(s, sizes);
  }
  return lp;
}

idx labeled_product::index_of(const std::vector<idx>& tuple) const {
  if (tuple.size() != factors.size()) fail(errc::invalid, "tuple arity mismatch");
  std::vector<int> sizes;
  for (const auto& f : factors) sizes.push_back(f.size());
  for (size_t k = 0; k < tuple.size(); ++k)
    if (tuple[k] < 0 || tuple[k] >= sizes[k]) fail(errc::invalid, "tuple entry out of range");
  return (idx)tuple_index(tuple, sizes);
}

bool labeled_product::ac_labeling(idx f) const {
  const auto& t = tuples[f];
  for (int x = 0; x < poset.size(); ++x)
    for (int y = 0; y < poset.size(); ++y)
      if (poset.less(x, y) && t[x] != factors[x].zero && t[y] != factors[y].one)
        return false;
  return true;
}

table1 box_from_delta(const labeled_product& lp) {
  table1 out(lp.prod.size());
  for (idx i = 0; i < lp.prod.size(); ++i)
    out[i] = (uint16_t)lp.prod.neg_of(lp.delta[lp.prod.neg_of(i)]);
  return out;
}

finite_algebra modal_product(const labeled_product& lp, bool tense) {
  for (size_t k = 0; k < lp.factors.size(); ++k) {
    auto r = classify(lp.factors[k]);
    if (!r.is_mv) {
      std::string why = r.first_counterexample ? r.first_counterexample->law : "an MV law";
      fail(errc::precondition, "factor " + std::to_string(k) + " (" + lp.factors[k].name +
                                   ") is not an MV-algebra: fails " + why);
    }
  }
  finite_algebra a = lp.prod;
  if (tense) {
    a.name += "_tense";
    a.modals.push_back({"G", lp.sigma});
    a.modals.push_back({"H", box_from_delta(lp)});
  } else {
    a.name += "_box";
    a.modals.push_back({"box", lp.sigma});
  }
  return a;
}

rl_report check_conucleus(const finite_algebra& a, const std::string& modal) {
  auto base = check_residuated_lattice(a);
  if (!base.pass)
    fail(errc::precondition, "base algebra fails " + base.first->law);
  const modal_op* mo = a.find_modal(modal);
  if (!mo) fail(errc::not_found, "no modal named '" + modal + "'");
  const table1& g = mo->map;

  rl_report r;
  auto record = [&](const char* law, std::vector<idx> w) {
    r.pass = false;
    r.first = law_failure{law, std::move(w)};
  };
  for (idx x = 0; x < a.size() && r.pass; ++x)
    if (!a.leq(g[x], x)) record("conucleus-contracting", {x});
  for (idx x = 0; x < a.size() && r.pass; ++x)
    if (g[g[x]] != g[x]) record("conucleus-idempotent", {x});
  for (idx x = 0; x < a.size() && r.pass; ++x)
    for (idx y = 0; y < a.size() && r.pass; ++y)
      if (a.leq(x, y) && !a.leq(g[x], g[y])) record("conucleus-monotone", {x, y});
  for (idx x = 0; x < a.size() && r.pass; ++x)
    for (idx y = 0; y < a.size() && r.pass; ++y)
      if (!a.leq(a.mult_of(g[x], g[y]), g[a.mult_of(x, y)])) record("conucleus-mult", {x, y});
  for (idx x = 0; x < a.size() && r.pass; ++x)
    if (a.mult_of(g[x], g[a.one]) != g[x]) record("conucleus-unit", {x});
  return r;
}

interior_image conucleus_image(const finite_algebra& a, const std::string& modal) {
  auto chk = check_conucleus(a, modal);
  if (!chk.pass)
    fail(errc::precondition,
         "'" + modal + "' is not a conucleus: fails " + chk.first->law);
  const table1& g = a.find_modal(modal)->map;

  interior_image im;
  im.from_parent.assign(a.size(), -1);
  for (idx x = 0; x < a.size(); ++x)
    if (g[x] == x) {
      im.from_parent[x] = (idx)im.to_parent.size();
      im.to_parent.push_back(x);
    }
  const int n = (int)im.to_parent.size();

  finite_algebra& b = im.algebra;
  b.name = a.name + ".img(" + modal + ")";
  for (idx i = 0; i < n; ++i) b.carrier.push_back(a.carrier[im.to_parent[i]]);
  b.meet.resize((size_t)n * n);
  b.join.resize((size_t)n * n);
  b.mult.resize((size_t)n * n);
  b.impl.resize((size_t)n * n);
  for (idx i = 0; i < n; ++i)
    for (idx j = 0; j < n; ++j) {
      idx x = im.to_parent[i], y = im.to_parent[j];
      idx jn = a.join_of(x, y);
      idx ml = a.mult_of(x, y);
      if (im.from_parent[jn] < 0)
        fail(errc::invalid, "restricted join leaves the fixpoint set at (" + a.carrier[x] +
                                "," + a.carrier[y] + ")");
      if (im.from_parent[ml] < 0)
        fail(errc::invalid, "restricted mult leaves the fixpoint set at (" + a.carrier[x] +
                                "," + a.carrier[y] + ")");
      b.join[(size_t)i * n + j] = (uint16_t)im.from_parent[jn];
      b.mult[(size_t)i * n + j] = (uint16_t)im.from_parent[ml];
      b.meet[(size_t)i * n + j] = (uint16_t)im.from_parent[g[a.meet_of(x, y)]];
      b.impl[(size_t)i * n + j] = (uint16_t)im.from_parent[g[a.impl_of(x, y)]];
    }
  b.zero = im.from_parent[a.zero];
  b.one = im.from_parent[g[a.one]];
  if (b.zero < 0 || b.one < 0)
    fail(errc::invalid, "conucleus image lost a bound");

  auto post = check_residuated_lattice(b);
  if (!post.pass)
    fail(errc::invalid, "conucleus image fails " + post.first->law);
  return im;
}

}  // namespace gblx
