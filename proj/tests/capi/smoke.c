/* Exercises the public header from plain C: handle lifecycle, string
 * ownership and a couple of end-to-end calls.  Returns 0 on success, a
 * small positive step number on the first failure. */

#include <gblx.h>

#include <string.h>

static int contains(const char* hay, const char* needle) {
  return hay != NULL && strstr(hay, needle) != NULL;
}

int gblx_c_smoke(void) {
  gblx_algebra* a = NULL;
  gblx_algebra* b = NULL;
  gblx_formula* f = NULL;
  gblx_formula* tf = NULL;
  gblx_formula* bad = NULL;
  char* text = NULL;
  int rc = 0;

  if (gblx_version() == NULL) return 1;

  if (gblx_lukasiewicz(3, &a) != GBLX_OK) return 2;
  if (gblx_algebra_size(a) != 3) { rc = 3; goto done; }

  if (gblx_with_identity_modal(a, "box", &b) != GBLX_OK) { rc = 4; goto done; }
  if (gblx_algebra_to_json(b, &text) != GBLX_OK) { rc = 5; goto done; }
  if (!contains(text, "\"box\"")) { rc = 6; goto done; }
  gblx_string_free(text);
  text = NULL;

  if (gblx_algebra_check_json(b, &text) != GBLX_OK) { rc = 7; goto done; }
  if (!contains(text, "\"pass\": true")) { rc = 8; goto done; }
  gblx_string_free(text);
  text = NULL;

  if (gblx_formula_parse("p1 -> p2", NULL, 0, &f) != GBLX_OK) { rc = 9; goto done; }
  if (gblx_translate(f, "M", &tf) != GBLX_OK) { rc = 10; goto done; }
  if (gblx_formula_print(tf, &text) != GBLX_OK) { rc = 11; goto done; }
  if (strcmp(text, "(box ((box p1) -> (box p2)))") != 0) { rc = 12; goto done; }
  gblx_string_free(text);
  text = NULL;

  /* Failed checks still return GBLX_OK; the verdict lives in the report. */
  if (gblx_validate_json(a, "p1 | ~p1 = 1", &text) != GBLX_OK) { rc = 13; goto done; }
  if (!contains(text, "\"pass\": false")) { rc = 14; goto done; }
  gblx_string_free(text);
  text = NULL;

  /* Error paths leave a message readable through gblx_last_error. */
  if (gblx_formula_parse("p1 ->", NULL, 0, &bad) != GBLX_E_PARSE) { rc = 15; goto done; }
  if (gblx_last_error() == NULL || gblx_last_error()[0] == '\0') { rc = 16; goto done; }
  if (bad != NULL) { rc = 17; goto done; }

done:
  gblx_string_free(text);
  gblx_formula_free(bad);
  gblx_formula_free(tf);
  gblx_formula_free(f);
  gblx_algebra_free(b);
  gblx_algebra_free(a);
  return rc;
}
