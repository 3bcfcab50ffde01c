#include <cstdio>
#include <iostream>
#include "ikg/prover.hpp"
#include "ikg/graph6.hpp"
using namespace ikg;
int main() {
  auto rep = verify_theorem(2, RuleSet{}, &std::cerr);
  printf("families: K7=%zu K3311=%zu(%zu tf) E9e=%zu(%zu tf)\n",
         rep.k7_family, rep.k3311_family, rep.k3311_triangle_free, rep.e9e_family, rep.e9e_triangle_free);
  printf("A: cand=%llu planar=%llu twocut=%llu surv=%zu\n",
         (unsigned long long)rep.regime_a.candidates, (unsigned long long)rep.regime_a.planar_reduced,
         (unsigned long long)rep.regime_a.two_cut, rep.regime_a.survivors.size());
  printf("B: cand=%llu planar=%llu twocut=%llu surv=%zu\n",
         (unsigned long long)rep.regime_b.candidates, (unsigned long long)rep.regime_b.planar_reduced,
         (unsigned long long)rep.regime_b.two_cut, rep.regime_b.survivors.size());
  for (auto& s : rep.regime_b.survivors) {
    printf("  survivor n=%d g6=%s degseq=", s.graph.order(), s.form.bytes.c_str());
    for (int d : s.degree_sequence) printf("%d", d);
    if (s.positive) printf(" contraction=(%d,%d)->%s order %d", s.positive->contraction.first,
                           s.positive->contraction.second, s.positive->family.c_str(), s.positive->target_order);
    printf("\n");
  }
  printf("failures (%zu):\n", rep.failures.size());
  for (auto& f : rep.failures) printf("  %s\n", f.c_str());
  printf("wall=%.1fs ok=%d\n", rep.wall_seconds, (int)rep.ok());
  return rep.ok() ? 0 : 1;
}
