#include <cstdio>
#include "ikg/prover.hpp"
#include "ikg/catalog.hpp"
using namespace ikg;
int main() {
  auto k7 = family_closure(build("K7").graph, MoveSet::ty());
  auto k3311 = family_closure(build("K3311").graph, MoveSet::both());
  auto e9e = family_closure(build("cousin110").graph, MoveSet::both());
  int total = 0, surv = 0;
  for (auto* fam : {&k7, &k3311, &e9e})
    for (auto& [form, m] : fam->members) {
      ++total;
      auto c = eliminate(m.graph);
      if (c.kind == CertKind::Survivor) ++surv;
      else printf("UNSOUND: member %s eliminated by %s\n", form.bytes.c_str(), to_string(c.kind));
    }
  printf("audit: %d/%d members survive elimination\n", surv, total);
  // orders present in K7 family
  printf("K7 family orders:");
  for (auto& [f, m] : k7.members) printf(" %d", m.graph.order());
  printf("\n");
  return surv == total ? 0 : 1;
}
