#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace gblx {

enum class fk { var, zero, one, meet, join, fuse, imp, modal };

class formula;
using fptr = std::shared_ptr<const formula>;

// Immutable syntax tree over the bounded language with fusion, implication
// and named unary modalities.  Negation and the biconditional are surface
// abbreviations only; they are expanded at parse time and never appear as
// nodes.  Trees may share subterms, so treat every fptr as read-only and
// build through the factories.
class formula {
 public:
  fk kind;
  int var = -1;                // fk::var: variable index, `p3` has index 3
  std::string modal;           // fk::modal: operator name
  fptr lhs, rhs;               // binary nodes; modal uses lhs only

  explicit formula(fk k) : kind(k) {}

  static fptr mk_var(int index);
  static fptr mk_zero();
  static fptr mk_one();
  static fptr mk_meet(fptr l, fptr r);
  static fptr mk_join(fptr l, fptr r);
  static fptr mk_fuse(fptr l, fptr r);
  static fptr mk_imp(fptr l, fptr r);
  static fptr mk_binary(fk k, fptr l, fptr r);
  static fptr mk_modal(std::string name, fptr sub);

  // f -> 0
  static fptr mk_neg(fptr f);
  // (l -> r) & (r -> l)
  static fptr mk_iff(fptr l, fptr r);
};

bool equal(const fptr& a, const fptr& b);

// Leaves have height 0.
int height(const fptr& f);

std::set<int> var_indices(const fptr& f);

// Names of the modal operators occurring in f.
std::set<std::string> modal_names(const fptr& f);

bool is_pure(const fptr& f);  // no modal nodes

// Canonical fully parenthesized form, e.g. "(p1 -> (G p2))".
// parse(print(f)) == f and print is a fixpoint of parse-then-print.
std::string print(const fptr& f);

// Every modal node named `from` becomes `to`; everything else is shared.
fptr relabel_modal(const fptr& f, const std::string& from, const std::string& to);

// Interior translation into the box fragment: variables become (box p),
// implications become box-guarded, the lattice/monoid connectives and the
// constants pass through.  Input must be pure (errc::precondition).
fptr translate_m(const fptr& f);

// Same shape with G in place of box.
fptr translate_t(const fptr& f);

// A modal signature is an ordered list of distinct operator names.  Names
// must be identifiers and must avoid the tokens the grammar claims for
// itself: variables (p<digits>), the abbreviations P and F, and 0/1.
void validate_signature(const std::vector<std::string>& names);

}  // namespace gblx
