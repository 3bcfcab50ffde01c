#include <cstdio>
#include "ikg/graph6.hpp"
#include "ikg/catalog.hpp"
using namespace ikg;
int main() {
  for (auto name : {"K5","K7","K33","K44","K3311","Petersen","cousin110","M11"})
    printf("%s %s\n", name, graph6_encode(build(name).graph).c_str());
  printf("empty0 %s\n", graph6_encode(SimpleGraph::empty(0)).c_str());
  printf("empty1 %s\n", graph6_encode(SimpleGraph::empty(1)).c_str());
  SimpleGraph p3 = SimpleGraph::from_edges(3, {{0,1},{1,2}});
  printf("P3 %s\n", graph6_encode(p3).c_str());
  return 0;
}
