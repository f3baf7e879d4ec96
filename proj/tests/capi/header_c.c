/* Checks that the public header is valid C and the shared library links. */
#include <stdio.h>

#include "gq3/gq3.h"

int main(void) {
  gq3_context* ctx = gq3_context_create();
  gq3_params k;
  gq3_quat p, q, out;
  int i;
  if (!ctx || gq3_family(ctx, "hamilton", &k) != GQ3_OK) return 1;
  p.params = k;
  q.params = k;
  for (i = 0; i < 4; ++i) {
    p.c[i] = 0;
    q.c[i] = 0;
  }
  p.c[1] = 1;
  q.c[2] = 1;
  if (gq3_mul(ctx, &p, &q, &out) != GQ3_OK || out.c[3] != 1.0) return 1;
  if (gq3_mul(ctx, &p, &p, &out) != GQ3_OK || out.c[0] != -1.0) return 1;
  gq3_context_destroy(ctx);
  printf("ok\n");
  return 0;
}
