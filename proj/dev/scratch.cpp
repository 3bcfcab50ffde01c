#include <cstdio>
#include "ikg/catalog.hpp"
#include "ikg/moves.hpp"
#include "ikg/canonical.hpp"
#include "ikg/graph6.hpp"
using namespace ikg;
int main() {
  auto k7 = build("K7").graph;
  auto famk7 = family_closure(k7, MoveSet::ty());
  printf("K7 family (ty only): %zu\n", famk7.size());
  auto k3311 = build("K3311").graph;
  auto fam2 = family_closure(k3311, MoveSet::both());
  printf("K3311 family: %zu tf=%zu\n", fam2.size(), triangle_free_members(fam2).size());
  auto c110 = build("cousin110").graph;
  printf("cousin110: n=%d m=%d tf=%d\n", c110.order(), c110.edge_count(), (int)is_triangle_free(c110));
  auto fam3 = family_closure(c110, MoveSet::both());
  printf("E9+e family: %zu tf=%zu\n", fam3.size(), triangle_free_members(fam3).size());
  auto m11 = build("M11").graph;
  printf("M11: n=%d m=%d tf=%d in_k3311=%d in_e9e=%d\n", m11.order(), m11.edge_count(),
         (int)is_triangle_free(m11), (int)fam2.contains(canonicalize(m11)), (int)fam3.contains(canonicalize(m11)));
  return 0;
}
