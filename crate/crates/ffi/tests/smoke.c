#include <stdio.h>
#include <string.h>

#include "fdmatroid.h"

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,         \
              fdm_last_error());                                     \
      return 1;                                                      \
    }                                                                \
  } while (0)

int main(void) {
  FdmSystem *sys = NULL;
  char *text = NULL;
  size_t n = 0;
  bool yes = false;

  CHECK(fdm_system_parse("attrs: a b c d\na -> b\nb -> a\na c -> d\n", &sys) ==
        FDM_STATUS_OK);
  CHECK(fdm_closure(sys, "b c", &text) == FDM_STATUS_OK);
  CHECK(strcmp(text, "a b c d") == 0);
  fdm_string_free(text);
  CHECK(fdm_keys_of(sys, "a b c d", &text) == FDM_STATUS_OK);
  CHECK(strcmp(text, "a c\nb c\n") == 0);
  fdm_string_free(text);
  CHECK(fdm_basis_count(sys, 256, &n) == FDM_STATUS_OK && n == 3);
  CHECK(fdm_directly_determines(sys, "a c", "b c", &yes) == FDM_STATUS_OK && yes);
  CHECK(fdm_closure(sys, "z", &text) == FDM_STATUS_UNKNOWN_ATTRIBUTE);
  CHECK(strlen(fdm_last_error()) > 0);
  CHECK(fdm_closure(NULL, "a", &text) == FDM_STATUS_NULL_ARGUMENT);
  fdm_system_free(sys);

  FdmFlats *flats = NULL;
  char *top = NULL;
  char *bottom = NULL;
  CHECK(fdm_flats_parse("attrs: a b c\na b\nc\n", &flats) == FDM_STATUS_OK);
  CHECK(fdm_flats_closure(flats, "c", &top, &bottom) == FDM_STATUS_OK);
  CHECK(strcmp(top, "c") == 0 && strcmp(bottom, "a b c") == 0);
  fdm_string_free(top);
  fdm_string_free(bottom);
  fdm_flats_free(flats);

  printf("ok %s\n", fdm_version());
  return 0;
}
