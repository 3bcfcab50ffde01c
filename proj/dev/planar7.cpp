#include <cstdio>
#include <bit>
#include "ikg/planarity.hpp"
#include "../tests/oracles.hpp"
using namespace ikg;
int main() {
  int n = 7, npairs = 21;
  std::vector<Edge> pairs;
  for (int c = 1; c < n; ++c) for (int r = 0; r < c; ++r) pairs.emplace_back(r, c);
  long mism = 0, tested = 0;
  for (uint32_t mask = 0; mask < (1u<<npairs); ++mask) {
    if (std::popcount(mask) < 9) continue;
    SimpleGraph g = SimpleGraph::empty(n);
    for (int i = 0; i < npairs; ++i) if (mask>>i&1u) g.add_edge(pairs[i].first, pairs[i].second);
    ++tested;
    if (is_planar(g) != oracle::planar_by_subdivision(g)) { ++mism; if (mism<4) printf("MISMATCH mask=%u\n", mask); }
  }
  printf("n=7 tested=%ld mismatches=%ld\n", tested, mism);
  return 0;
}
