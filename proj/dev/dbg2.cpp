#define private public
#include <cstdio>
#include "ikg/graph.hpp"
#include "ikg/catalog.hpp"
using namespace ikg;
#include "../src/planarity.cpp"
int main() {
  auto k33 = build("K33").graph;
  Demoucron d(k33);
  // replicate run() with prints
  auto cycle = d.find_cycle();
  printf("cycle:"); for (int v : cycle) printf(" %d", v); printf("\n"); fflush(stdout);
  for (size_t i = 0; i < cycle.size(); ++i) d.embed_edge(cycle[i], cycle[(i+1)%cycle.size()]);
  for (int v : cycle) d.embedded_ |= 1u << v;
  d.faces_.push_back(cycle); d.faces_.push_back(cycle);
  for (int iter = 0; iter < 12; ++iter) {
    auto frags = d.compute_fragments();
    printf("iter %d: %zu fragments\n", iter, frags.size());
    if (frags.empty()) { printf("planar\n"); return 0; }
    int forced = -1;
    for (size_t i = 0; i < frags.size(); ++i) {
      int count = d.admissible_count(frags[i].attachments);
      printf("  frag %zu interior=%x att=%x admissible=%d\n", i, frags[i].interior, frags[i].attachments, count);
      if (count == 0) { printf("nonplanar\n"); return 0; }
      if (count == 1 && forced < 0) forced = (int)i;
    }
    auto& frag = frags[forced < 0 ? 0 : forced];
    int face = d.first_admissible(frag.attachments);
    printf("  embedding frag (forced=%d) into face %d\n", forced, face);
    d.embed_fragment_path(frag, face);
    for (auto& f : d.faces_) { printf("   face:"); for (int v : f) printf(" %d", v); printf("\n"); }
    fflush(stdout);
  }
  return 0;
}
