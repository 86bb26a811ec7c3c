/* gblx: finite residuated-lattice workbench, C interface.
 *
 * Conventions:
 *  - Every fallible call returns gblx_status; GBLX_OK means the call itself
 *    succeeded.  A check that ran and failed is still GBLX_OK; the verdict
 *    lives in the returned JSON report ("pass", "ok", "failures", ...).
 *  - On a non-OK status, gblx_last_error() describes the problem.  The
 *    buffer is thread-local and valid until the next failing call on the
 *    same thread.
 *  - Strings returned through char** are heap-allocated; release them with
 *    gblx_string_free.  Handles are released with their matching _free.
 *  - Element subsets and embeddings are passed as comma-separated carrier
 *    names; commas inside parentheses do not split, so tuple names like
 *    (1,0) work unquoted.
 */

#ifndef GBLX_H
#define GBLX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gblx_status {
  GBLX_OK = 0,
  GBLX_E_PARSE = 1,        /* unlexable or ungrammatical text */
  GBLX_E_INVALID = 2,      /* malformed table or broken invariant */
  GBLX_E_CAP = 3,          /* configured resource cap exceeded */
  GBLX_E_NOT_FOUND = 4,    /* unknown element, modal, suite or preset */
  GBLX_E_IO = 5,           /* JSON envelope trouble */
  GBLX_E_PRECONDITION = 6, /* operation applied outside its domain */
} gblx_status;

typedef struct gblx_algebra gblx_algebra;
typedef struct gblx_poset gblx_poset;
typedef struct gblx_formula gblx_formula;

const char* gblx_version(void);
const char* gblx_last_error(void);
void gblx_string_free(char* s);

/* Caps: "vars", "assignments", "poset", "product", "lddt-product-len",
 * "lddt-block-len".  Values must be positive. */
gblx_status gblx_cap_set(const char* name, long value);
gblx_status gblx_cap_get(const char* name, long* value);

/* ------------------------------------------------------------ algebras */

gblx_status gblx_algebra_from_json(const char* json, gblx_algebra** out);
gblx_status gblx_algebra_to_json(const gblx_algebra* a, char** out);
void gblx_algebra_free(gblx_algebra* a);

gblx_status gblx_lukasiewicz(int n, gblx_algebra** out);
gblx_status gblx_with_identity_modal(const gblx_algebra* a, const char* modal,
                                     gblx_algebra** out);
gblx_status gblx_direct_product(const gblx_algebra* const* factors, int count,
                                gblx_algebra** out);

int gblx_algebra_size(const gblx_algebra* a);

/* Residuated-lattice laws plus class flags (GBL, BL, MV, S4MV(I), S4tMV)
 * and per-modal endomorphism/interior flags.  Report:
 * {"pass", "flags":{...}, "modals":[...], "first_failure"?}. */
gblx_status gblx_algebra_check_json(const gblx_algebra* a, char** report);

/* ------------------------------------------------------------- posets */

gblx_status gblx_poset_from_json(const char* json, gblx_poset** out);
gblx_status gblx_poset_to_json(const gblx_poset* p, char** out);
void gblx_poset_free(gblx_poset* p);
int gblx_poset_size(const gblx_poset* p);

/* Poset product of one factor per poset element (same order).  tense = 0
 * attaches {box: sigma}, tense != 0 attaches {G: sigma, H: ~delta~}.
 * sidecar (optional, pass NULL to skip) receives the tuple<->index map
 * and the antichain labelings. */
gblx_status gblx_poset_product(const gblx_poset* p, const gblx_algebra* const* factors,
                               int count, int tense, gblx_algebra** out,
                               char** sidecar);

/* Conucleus laws for one named modal.  {"pass", "first_failure"?} */
gblx_status gblx_conucleus_check_json(const gblx_algebra* a, const char* modal,
                                      char** report);

/* Image algebra on the fixpoints; map (optional) receives
 * {"fixpoints":[names]} in image order. */
gblx_status gblx_conucleus_image(const gblx_algebra* a, const char* modal,
                                 gblx_algebra** out, char** map);

/* ----------------------------------------------------------- formulas */

/* modal_names may be NULL when count is 0. */
gblx_status gblx_formula_parse(const char* text, const char* const* modal_names,
                               int count, gblx_formula** out);
gblx_status gblx_formula_print(const gblx_formula* f, char** out);
int gblx_formula_height(const gblx_formula* f);
void gblx_formula_free(gblx_formula* f);

/* mode "M" (box fragment) or "T" (tense fragment via G); pure input only. */
gblx_status gblx_translate(const gblx_formula* f, const char* mode,
                           gblx_formula** out);

/* ---------------------------------------------------------- semantics */

/* equation: "<formula> = <formula>", parsed over the algebra's own modal
 * signature.  {"pass", "assignments_checked", "countermodel"?} */
gblx_status gblx_validate_json(const gblx_algebra* a, const char* equation,
                               char** report);

/* Consequence over a finite list of algebras; premises and conclusion are
 * equation strings parsed over the union of the algebras' signatures.
 * {"pass", "assignments_checked", "algebra"?, "witness"?} */
gblx_status gblx_consequence_json(const gblx_algebra* const* algebras, int count,
                                  const char* const* premises, int n_premises,
                                  const char* conclusion, char** report);

/* For a pure formula and a modal algebra: pointwise agreement through the
 * interior image, validity equivalence, and fixedness of translated
 * values.  {"pass", "mode", "pointwise", "validity", "fixedness", ...} */
gblx_status gblx_translation_check_json(const gblx_algebra* a, const gblx_formula* f,
                                        char** report);

/* ------------------------------------------------------------ filters */

/* Filter laws for one subset.  {"pass", "first_failure"?} */
gblx_status gblx_filter_check_json(const gblx_algebra* a, const char* elements,
                                   char** report);

/* Least modal filter containing the generators (may be "").
 * {"filter":[names], "size"} */
gblx_status gblx_filter_generate_json(const gblx_algebra* a, const char* generators,
                                      char** report);

/* {"count", "filters":[[names], ...]} */
gblx_status gblx_filters_enumerate_json(const gblx_algebra* a, char** report);

/* {"count", "congruences":[[[names],...block lists], ...]} */
gblx_status gblx_congruences_enumerate_json(const gblx_algebra* a, char** report);

/* theta_f as blocks of carrier names.  {"blocks":[[names],...]} */
gblx_status gblx_filter_to_congruence_json(const gblx_algebra* a, const char* elements,
                                           char** report);

/* Least congruence merging x and y, plus its filter (the block of 1).
 * {"blocks":[[names],...], "filter":[names]} */
gblx_status gblx_principal_congruence_json(const gblx_algebra* a, const char* x,
                                           const char* y, char** report);

/* Embedding given as one ambient carrier name per subalgebra element, in
 * subalgebra order.  {"pass", "filters_checked", "witness"?} */
gblx_status gblx_cep_check_json(const gblx_algebra* sub, const gblx_algebra* ambient,
                                const char* embedding, char** report);

/* Deduction-witness search.  gamma/delta are subsets, psi one element;
 * single_box != 0 collapses blocks to the one modal.  {"status":
 * "witness"|"no-witness"|"inconclusive", "member", "factors"?, ...} */
gblx_status gblx_lddt_json(const gblx_algebra* a, const char* gamma,
                           const char* delta, const char* psi, int single_box,
                           char** report);

/* m-fold iterate of lambda(x) = product of all modal images.
 * {"element", "power", "result"} */
gblx_status gblx_lambda_json(const gblx_algebra* a, const char* x, int m,
                             char** report);

/* ------------------------------------------------------------- proofs */

/* Derivation file content in, verdict out.
 * {"ok", "steps", "logic", "bad_step"?, "reason"?} */
gblx_status gblx_proof_check_json(const char* derivation, char** report);

/* Checks the derivation, then confirms the algebraic consequence
 * premises = 1 entail conclusion = 1 on every listed algebra. */
gblx_status gblx_proof_soundness_json(const char* derivation,
                                      const gblx_algebra* const* algebras, int count,
                                      char** report);

/* ------------------------------------------------------------- suites */

/* {"suites":[names]} in canonical order. */
gblx_status gblx_suite_names_json(char** report);

/* Property sweep over the built-in corpus.  filter ("" for all) keeps only
 * corpus entries whose name contains it.  {"name", "seed", "checked",
 * "failures", "first_failure"?, "elapsed_ms"} */
gblx_status gblx_suite_run_json(const char* name, unsigned long long seed,
                                const char* filter, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GBLX_H */
