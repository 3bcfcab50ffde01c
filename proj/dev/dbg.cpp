#include <cstdio>
#include "ikg/graph.hpp"
#include "ikg/catalog.hpp"
using namespace ikg;
// pull in internals by including the cpp
#define private public
#include "../src/planarity.cpp"
int main() {
  auto k33 = build("K33").graph;
  printf("blocks:\n");
  auto comps = biconnected_components(k33);
  printf("n comps=%zu\n", comps.size());
  for (auto& c : comps) { printf("  sz=%zu:", c.size()); for (auto [u,v]:c) printf(" %d-%d", u,v); printf("\n"); }
  fflush(stdout);
  Demoucron d(k33);
  printf("demoucron=%d\n", (int)d.run());
  return 0;
}
