#include <cstdio>
#include <atomic>
#include "ikg/enumeration.hpp"
using namespace ikg;
int main(int argc, char** argv) {
  int jobs = argc > 1 ? atoi(argv[1]) : 2;
  for (auto prof : {DegreeProfile::MaxDegAtLeast6, DegreeProfile::MaxDeg5WithAtLeastTwoDeg5}) {
    Regime r{22, 3, true, true, prof, nullptr};
    auto seqs = feasible_degree_sequences(r);
    printf("profile %d: %zu sequences\n", (int)prof, seqs.size());
    std::atomic<uint64_t> count{0};
    auto st = enumerate_regime(r, jobs, [&](const SimpleGraph&) { count++; });
    printf("  classes=%llu nodes=%llu truncated=%d\n",
           (unsigned long long)count.load(), (unsigned long long)st.search_nodes, (int)st.truncated);
  }
  return 0;
}
