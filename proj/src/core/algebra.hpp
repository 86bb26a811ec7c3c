#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gblx {

using idx = int;                       // dense element index, 0..n-1
using table1 = std::vector<uint16_t>;  // unary operation table, length n
using table2 = std::vector<uint16_t>;  // binary operation table, n*n row-major

struct modal_op {
  std::string name;
  table1 map;
};

// Finite candidate for a bounded commutative integral residuated lattice
// with finitely many named unary operations.  Tables are plain data and
// promise nothing; see check_residuated_lattice / classify.  The lattice
// order is the one induced by the meet table: x <= y iff meet(x,y) = x.
// Declaration order of `modals` is semantic: lambda multiplies the modal
// images left to right in that order.
struct finite_algebra {
  std::string name;
  std::vector<std::string> carrier;  // distinct display names
  table2 meet, join, mult, impl;
  idx zero = 0, one = 0;
  std::vector<modal_op> modals;

  int size() const { return (int)carrier.size(); }

  idx meet_of(idx x, idx y) const { return meet[(size_t)x * carrier.size() + y]; }
  idx join_of(idx x, idx y) const { return join[(size_t)x * carrier.size() + y]; }
  idx mult_of(idx x, idx y) const { return mult[(size_t)x * carrier.size() + y]; }
  idx impl_of(idx x, idx y) const { return impl[(size_t)x * carrier.size() + y]; }
  idx neg_of(idx x) const { return impl_of(x, zero); }
  bool leq(idx x, idx y) const { return meet_of(x, y) == x; }

  const modal_op* find_modal(const std::string& name) const;
  bool has_modal(const std::string& name) const { return find_modal(name) != nullptr; }
  std::vector<std::string> modal_name_list() const;

  // errc::not_found if `name` is not a carrier element
  idx element(const std::string& name) const;

  // Structural sanity: table shapes, index ranges, distinct carrier names,
  // zero/one in range.  errc::invalid on the first problem.
  void validate_shape() const;
};

struct law_failure {
  std::string law;
  std::vector<idx> witness;  // lexicographically least, in scan order
};

struct rl_report {
  bool pass = true;
  std::optional<law_failure> first;
};

// Bounded lattice laws, commutative monoid laws with unit = one, and the
// residuation equivalence mult(x,y) <= z iff x <= impl(y,z).  Checked in a
// fixed documented order; stops at the first failed law.
rl_report check_residuated_lattice(const finite_algebra& a);

struct modal_flags {
  bool endo = false;      // preserves meet, mult, zero and one
  bool interior = false;  // contracting, idempotent, monotone
  std::optional<law_failure> fail;
};

struct class_report {
  bool is_rl = false;
  bool is_gbl = false;  // divisibility: x * (x -> y) = x & y
  bool is_bl = false;   // + prelinearity: (x -> y) | (y -> x) = 1
  bool is_mv = false;   // + involution: ~~x = x
  std::vector<std::pair<std::string, modal_flags>> modals;
  bool is_s4mv = false;   // MV with >= 1 modal, all interior endomorphisms
  bool tense_signature = false;  // modal names are exactly {G, H}
  bool is_s4tmv = false;  // + x -> G~H~x = 1 and x -> H~G~x = 1
  std::optional<law_failure> first_counterexample;
};

class_report classify(const finite_algebra& a);

// Residuum table forced by meet/join/mult: impl(y,z) = max { x : x*y <= z }.
// errc::invalid naming (y,z) if the maximum does not exist.
table2 derive_residuum(const finite_algebra& a);

// The n-element chain 0 < 1/(n-1) < ... < 1 with the standard truncated
// tables: mult(i,j) = max(0, i+j-(n-1)), impl(i,j) = min(n-1, n-1-i+j).
finite_algebra lukasiewicz_chain(int n);  // n >= 2

// Pointwise product.  Carrier is enumerated in mixed-radix order with the
// first factor most significant; element names are tuples of factor names.
// Modal tables are kept for names present in every factor.
finite_algebra direct_product(const std::vector<finite_algebra>& factors);

finite_algebra with_identity_modal(finite_algebra a, const std::string& name);

// x -> ~g(~x)
table1 conjugate_by_neg(const finite_algebra& a, const table1& g);

// P = ~H~ (needs modal H), F = ~G~ (needs modal G)
table1 p_table(const finite_algebra& a);
table1 f_table(const finite_algebra& a);

// lambda(x) = product of all modal images of x, declaration order;
// needs at least one modal.
table1 lambda_table(const finite_algebra& a);

// Mixed-radix tuple enumeration shared by the product builders.
std::vector<idx> tuple_of(long index, const std::vector<int>& sizes);
long tuple_index(const std::vector<idx>& t, const std::vector<int>& sizes);

}  // namespace gblx
