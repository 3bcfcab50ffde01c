#include <cstdio>
#include "ikg/catalog.hpp"
#include "ikg/moves.hpp"
#include "ikg/canonical.hpp"
using namespace ikg;
int main() {
  auto k7fam = family_closure(build("K7").graph, MoveSet::ty());
  for (const char* name : {"cousin110", "M11"}) {
    auto g = build(name).graph;
    printf("%s witnesses:", name);
    for (auto e : g.edges()) {
      auto h = contract_edge(g, e);
      if (k7fam.contains(canonicalize(h)))
        printf(" (%d,%d)->order%d", e.first, e.second, h.order());
    }
    printf("\n");
  }
  // K3311 should have none
  auto k3311 = build("K3311").graph;
  int cnt = 0;
  for (auto e : k3311.edges())
    if (k7fam.contains(canonicalize(contract_edge(k3311, e)))) ++cnt;
  printf("K3311 contractions into K7 family: %d\n", cnt);
  return 0;
}
