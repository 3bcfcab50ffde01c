#include <cstdio>
#include "ikg/planarity.hpp"
#include "ikg/catalog.hpp"
#include "../tests/oracles.hpp"
using namespace ikg;
int main(int argc, char** argv) {
  printf("K5 planar=%d\n", (int)is_planar(build("K5").graph)); fflush(stdout);
  printf("K33 planar=%d\n", (int)is_planar(build("K33").graph)); fflush(stdout);
  printf("Petersen planar=%d\n", (int)is_planar(build("Petersen").graph)); fflush(stdout);
  printf("K5 oracle=%d\n", (int)oracle::planar_by_subdivision(build("K5").graph)); fflush(stdout);
  printf("K33 oracle=%d\n", (int)oracle::planar_by_subdivision(build("K33").graph)); fflush(stdout);
  printf("Petersen oracle=%d\n", (int)oracle::planar_by_subdivision(build("Petersen").graph)); fflush(stdout);
  return 0;
}
