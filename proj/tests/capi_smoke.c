#include <stdio.h>
#include <string.h>

#include "cherednik/cherednik.h"

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    fprintf(stderr, "FAIL: %s (%s)\n", what, chd_last_error());
    ++failures;
  }
}

int main(void) {
  chd_group* g = NULL;
  expect(chd_group_new("h3", &g) == CHD_OK, "build h3");
  size_t order = 0;
  expect(chd_group_order(g, &order) == CHD_OK && order == 120, "order of h3");
  char* out = NULL;
  expect(chd_schur(g, NULL, "auto", 60, &out) == CHD_OK, "schur h3");
  expect(out && strstr(out, "Phi2^3 Phi3 Phi5 Phi6 Phi10 (x1)") != NULL, "schur text");
  chd_string_free(out);
  int fd = -1;
  expect(chd_finite_dim(g, NULL, "{\"c\": \"1/2\"}", 60, &fd, NULL) == CHD_OK, "finite-dim call");
  expect(fd == 0 || fd == 1, "finite-dim result");
  expect(chd_support(g, NULL, "{\"c\": ", 60, &out) == CHD_ERR_INVALID, "malformed params");
  expect(strlen(chd_last_error()) > 0, "error message set");
  chd_group_free(g);

  expect(chd_group_new("nonsense", &g) == CHD_ERR_INVALID, "bad spec");
  expect(chd_group_new("grpn:4,2,2", &g) == CHD_OK, "build G(4,2,2)");
  expect(chd_schur(g, NULL, "auto", 60, &out) == CHD_ERR_UNDECIDABLE, "no Schur data");
  chd_group_free(g);

  int res = -1;
  expect(chd_gr1n_criterion(2, 1, "{\"gr1n\": {\"c0\": \"0\", \"d\": [\"1\", \"0\"]}}", &res) == CHD_OK && res == 1,
         "criterion (a)");
  expect(chd_gr1n_criterion(1, 3, "{\"gr1n\": {\"c0\": \"1/3\", \"d\": [\"0\"]}}", &res) == CHD_ERR_INVALID,
         "criterion needs r >= 2");

  chd_table* t = NULL;
  expect(chd_table_parse("G4 | 1 | Phi2 (x1)\n", &t) == CHD_OK, "parse table");
  expect(chd_table_serialize(t, &out) == CHD_OK && strstr(out, "G4") != NULL, "serialize table");
  chd_string_free(out);
  chd_table_free(t);
  expect(chd_table_parse("G4 | 1\n", &t) == CHD_ERR_INVALID, "bad table line");

  if (failures == 0) printf("capi smoke: ok\n");
  return failures == 0 ? 0 : 1;
}
