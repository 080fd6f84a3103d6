#include <stdio.h>
#include <string.h>

#include "intgraph.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, \
              #cond);                                                 \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  const size_t edges[] = {0, 1, 0, 3, 1, 2, 1, 3, 2, 3};
  IgGraph *g = NULL;
  CHECK(ig_graph_new(4, edges, 5, &g) == IG_STATUS_OK);
  CHECK(ig_graph_vertex_count(g) == 4);

  bool unique = false;
  char *json = NULL;
  CHECK(ig_decide_unique(g, &unique, &json) == IG_STATUS_OK);
  CHECK(unique);
  CHECK(strcmp(json, "{\"unique\":true,\"order\":[[0,2]],\"wq_components\":2}") == 0);
  ig_string_free(json);

  size_t components = 0;
  CHECK(ig_wq_component_count(g, &components) == IG_STATUS_OK);
  CHECK(components == 2);
  ig_graph_free(g);

  IgGraph *c4 = NULL;
  CHECK(ig_graph_from_edge_list("4\n0 1\n1 2\n2 3\n3 0\n", &c4) == IG_STATUS_OK);
  CHECK(ig_recognize(c4, &json) == IG_STATUS_NEGATIVE);
  CHECK(strstr(json, "chordless_cycle") != NULL);
  ig_string_free(json);
  ig_graph_free(c4);

  IgGraph *bad = NULL;
  CHECK(ig_graph_from_json("{\"n\":2,\"edges\":[[0,7]]}", &bad) == IG_STATUS_INPUT_ERROR);
  CHECK(bad == NULL);
  CHECK(ig_last_error_message() != NULL);
  CHECK(ig_recognize(NULL, NULL) == IG_STATUS_NULL_POINTER);

  printf("ok %s\n", ig_version());
  return 0;
}
