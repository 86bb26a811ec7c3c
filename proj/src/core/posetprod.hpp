#pragma once

#include "core/algebra.hpp"
#include "core/poset.hpp"

namespace gblx {

// Product of one factor algebra per poset element together with the two
// canonical label-repair maps.  For a labeling f over the poset:
//   sigma(f)(x) = f(x) if f(y) = 1_y for every y > x, else 0_x
//   delta(f)(x) = f(x) if f(y) = 0_y for every y < x, else 1_x
// They are adjoint: f <= sigma(g) iff delta(f) <= g.  Factor modal tables
// do not survive into the product; the product's own modals are attached
// by modal_product.
struct labeled_product {
  finite_poset poset;
  std::vector<finite_algebra> factors;   // one per poset element, same order
  finite_algebra prod;                   // plain pointwise tables over tuples
  std::vector<std::vector<idx>> tuples;  // product index -> per-factor indices
  table1 sigma, delta;

  // Every factor must pass check_residuated_lattice (errc::precondition).
  static labeled_product build(finite_poset p, std::vector<finite_algebra> factors);

  idx index_of(const std::vector<idx>& tuple) const;

  // antichain-consistent: x < y implies f(x) = 0_x or f(y) = 1_y
  bool ac_labeling(idx f) const;
};

// x -> ~ delta(~x), the lower companion of sigma
table1 box_from_delta(const labeled_product& lp);

// The product with modal tables attached: {box: sigma}, or for the tense
// variant {G: sigma, H: ~delta~}.  Every factor must additionally classify
// as MV (errc::precondition names the first offender).
finite_algebra modal_product(const labeled_product& lp, bool tense);

// Interior-operator and multiplicativity laws for the named unary table:
// contracting, idempotent, monotone, g(x)g(y) <= g(xy), g(x)g(1) = g(x).
// The algebra itself must pass check_residuated_lattice (errc::precondition).
rl_report check_conucleus(const finite_algebra& a, const std::string& modal);

struct interior_image {
  finite_algebra algebra;        // fixpoint carrier; meet/impl are g-composed
  std::vector<idx> to_parent;    // image index -> parent index, ascending
  std::vector<idx> from_parent;  // parent index -> image index, -1 outside
};

// Image algebra of a conucleus: carrier = fixpoints of g, join and mult
// restricted (the laws force them to stay inside; leaving is reported as
// errc::invalid), meet and impl composed with g, bounds 0 and g(1).
// Requires check_conucleus to pass; the result is RL-checked before return.
interior_image conucleus_image(const finite_algebra& a, const std::string& modal);

}  // namespace gblx
