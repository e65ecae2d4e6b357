#include <stdio.h>
#include <string.h>
#include "aluffi_kit.h"

#define CHECK(cond)                                                        \
  do {                                                                     \
    if (!(cond)) {                                                         \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond);   \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  AkReport *report = NULL;
  AkOptions opts = ak_options_default();
  CHECK(ak_analyze("x,y", "x^4 - x^2*y^2 + y^5", &opts, &report) == AK_STATUS_OK);

  bool le = true, lt = true;
  size_t n = 0;
  uint64_t mu = 0, tau = 0;
  CHECK(ak_report_locally_eulerian(report, &le) == AK_STATUS_OK && !le);
  CHECK(ak_report_jacobian_linear_type(report, &lt) == AK_STATUS_OK && !lt);
  CHECK(ak_report_singular_point_count(report, &n) == AK_STATUS_OK && n == 1);
  CHECK(ak_report_milnor_tjurina(report, 0, &mu, &tau) == AK_STATUS_OK);
  CHECK(mu == 10 && tau == 9);
  CHECK(ak_report_milnor_tjurina(report, 1, &mu, &tau) == AK_STATUS_INDEX_OUT_OF_RANGE);

  char *json = NULL;
  CHECK(ak_report_json(report, &json) == AK_STATUS_OK && strstr(json, "\"milnor\"") != NULL);
  ak_string_free(json);
  ak_report_free(report);

  report = NULL;
  CHECK(ak_analyze("x,y", "x^2*y", NULL, &report) == AK_STATUS_PRECONDITION);
  CHECK(report == NULL && ak_last_error_message() != NULL);
  CHECK(ak_analyze("x,y", "x^^2", NULL, &report) == AK_STATUS_INVALID_INPUT);
  CHECK(ak_analyze(NULL, "x", NULL, &report) == AK_STATUS_NULL_ARGUMENT);

  printf("ok %s\n", ak_version());
  return 0;
}
