#include <cstdio>
#include "ikg/enumeration.hpp"
#include "ikg/canonical.hpp"
#include "ikg/catalog.hpp"
#include "ikg/graph6.hpp"
using namespace ikg;
int main() {
  // K33 regime: 9 edges, min degree 3, triangle-free, connected -> exactly K33
  Regime r9{9, 3, true, true, DegreeProfile::Any, nullptr};
  auto v = enumerate_sorted(r9);
  printf("9-edge regime classes: %zu", v.size());
  if (v.size() == 1) printf("  is_K33=%d", (int)is_isomorphic(v[0], build("K33").graph));
  printf("\n");

  // enumerate == brute force on several small regimes
  for (int m : {8, 9, 10, 11, 12}) {
    for (int tf = 0; tf <= 1; ++tf) {
      Regime r{m, 3, (bool)tf, true, DegreeProfile::Any, nullptr};
      auto got = enumerate_sorted(r);
      std::set<CanonicalForm> gotset;
      for (auto& g : got) gotset.insert(canonicalize(g));
      // orders up to 7 via oracle; regime may allow larger orders, restrict to <=7
      std::set<CanonicalForm> want;
      for (int n = 1; n <= 7; ++n) {
        auto part = brute_force_all(n, m, [&](const SimpleGraph& g) {
          int mind = 99; for (int x = 0; x < g.order(); ++x) mind = std::min(mind, g.degree(x));
          if (g.order() && mind < 3) return false;
          if (tf && !is_triangle_free(g)) return false;
          return is_connected(g);
        });
        want.insert(part.begin(), part.end());
      }
      std::set<CanonicalForm> got7;
      for (auto& g : got) if (g.order() <= 7) got7.insert(canonicalize(g));
      bool eq = got7 == want;
      printf("m=%d tf=%d: enum(total)=%zu enum(<=7)=%zu brute=%zu %s\n",
             m, tf, gotset.size(), got7.size(), want.size(), eq ? "OK" : "MISMATCH");
    }
  }
  return 0;
}
