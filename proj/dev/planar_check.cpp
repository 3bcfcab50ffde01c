#include <cstdio>
#include <bit>
#include "ikg/planarity.hpp"
#include "ikg/catalog.hpp"
#include "../tests/oracles.hpp"
using namespace ikg;
int main() {
  // sanity: K4 planar, K5/K33 not, Petersen not
  printf("K5 planar=%d K33 planar=%d Petersen planar=%d K4... \n",
    (int)is_planar(build("K5").graph), (int)is_planar(build("K33").graph), (int)is_planar(build("Petersen").graph));

  // exhaustive over all 6-vertex graphs with >=9 edges vs oracle
  for (int n = 5; n <= 6; ++n) {
    int npairs = n*(n-1)/2;
    std::vector<Edge> pairs;
    for (int c = 1; c < n; ++c) for (int r = 0; r < c; ++r) pairs.emplace_back(r, c);
    long mism = 0, tested = 0;
    for (uint32_t mask = 0; mask < (1u<<npairs); ++mask) {
      if (std::popcount(mask) < 9) continue;
      SimpleGraph g = SimpleGraph::empty(n);
      for (int i = 0; i < npairs; ++i) if (mask>>i&1u) g.add_edge(pairs[i].first, pairs[i].second);
      ++tested;
      bool a = is_planar(g), b = oracle::planar_by_subdivision(g);
      if (a != b) { ++mism; if (mism < 4) printf("MISMATCH n=%d mask=%u demoucron=%d oracle=%d\n", n, mask, (int)a, (int)b); }
    }
    printf("n=%d tested=%ld mismatches=%ld\n", n, tested, mism);
  }
  return 0;
}
