#include <stdio.h>
#include <string.h>

#include "fracfactor/fracfactor.h"

int main(void) {
  const char text[] = "3 3\n0 1\n1 2\n0 2\n";
  ff_graph* g = NULL;
  ff_report* r = NULL;
  ff_limits limits;
  int holds = 0;

  ff_limits_default(&limits);
  if (ff_graph_parse(text, strlen(text), &g) != FF_OK) return 1;
  if (ff_check_factor(g, 1, 1, &limits, 1, &r) != FF_OK) return 1;
  if (ff_report_holds(r, &holds) != FF_OK || holds != 1) return 1;
  ff_report_destroy(r);
  ff_graph_destroy(g);
  puts("ok");
  return 0;
}
