#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/algebra.hpp"

namespace gblx {

using subset = std::vector<uint8_t>;  // characteristic vector over the carrier

// Canonical partition encoding: block ids assigned by first occurrence, so
// two partitions are equal as vectors iff they are equal as partitions.
using partition = std::vector<int>;

// A filter here is always a modal filter: a nonempty up-set closed under
// mult and under every modal table of the algebra.
std::optional<law_failure> ifilter_violation(const finite_algebra& a, const subset& s);
bool is_ifilter(const finite_algebra& a, const subset& s);

// Least filter containing the generators: fixpoint closure under adding 1,
// upward closure, mult and the modal tables.  gens may be empty ({1}).
subset generate_filter(const finite_algebra& a, const std::vector<idx>& gens);

// theta_f: x ~ y iff (x -> y) * (y -> x) lands in the filter.  Input must
// be a filter (errc::precondition); the relation is verified to be an
// equivalence before the partition is returned.
partition filter_to_congruence(const finite_algebra& a, const subset& f);

// Block of 1.  The partition must be compatible with every operation
// (errc::precondition otherwise).
subset congruence_to_filter(const finite_algebra& a, const partition& th);

partition canonical_partition(const partition& labels);
bool partition_refines(const partition& p, const partition& q);  // p <= q
partition join_partitions(const partition& p, const partition& q);

// Least congruence merging x and y, by union-find closure under all
// operation tables.
partition principal_congruence(const finite_algebra& a, idx x, idx y);

// All congruences, as the join-closure of the principal ones over the
// diagonal.  Sorted lexicographically; independent of any filter code.
std::vector<partition> enumerate_congruences(const finite_algebra& a);

// All modal filters, by closing every generator subset and deduplicating.
// Sorted lexicographically.  Carrier size is capped (errc::cap).
std::vector<subset> enumerate_ifilters(const finite_algebra& a);

struct cep_report {
  bool pass = true;
  long filters_checked = 0;
  // (filter of the subalgebra, element where the trace differs)
  std::optional<std::pair<subset, idx>> witness;
};

// Congruence extension along an embedding: for every filter f of `sub`,
// the filter generated in `amb` by the image of f must trace back to f.
// `embed` maps sub indices to amb indices and is verified to be an
// embedding (injective, commutes with all tables and constants, same
// modal names).
cep_report check_cep(const finite_algebra& sub, const finite_algebra& amb,
                     const std::vector<idx>& embed);

enum class lddt_status { witness, no_witness, inconclusive };

// One factor of a deduction-witness product: a modal block applied to an
// element of Delta.  The block is a word of modal indices, outermost
// first; it is empty only on modal-free algebras.
struct lddt_factor {
  std::vector<int> block;
  idx element;
};

struct lddt_report {
  lddt_status status = lddt_status::no_witness;
  bool member = false;  // psi in Fg(gamma u delta)
  std::vector<lddt_factor> factors;
  idx implication = -1;  // value of (product -> psi) when a witness exists
};

struct lddt_query {
  std::vector<idx> gamma, delta;
  idx psi = 0;
};

// Searches for blocks M_j and elements d_j of delta with
// (prod_j M_j(d_j)) -> psi inside Fg(gamma), by increasing product length
// and then lexicographic block words.  `single_box` collapses every block
// to the one modal (interior idempotence); it requires exactly one modal.
// no_witness is definitive (it is equivalent to psi not being in
// Fg(gamma u delta)); inconclusive means the caps were exhausted.
lddt_report lddt_witness(const finite_algebra& a, const lddt_query& q, bool single_box);

// m-fold iterate of lambda at x; m = 0 returns x.
idx lambda_power(const finite_algebra& a, idx x, int m);

}  // namespace gblx
