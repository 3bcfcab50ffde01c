#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

/// Delete vertices a and b, then repeatedly remove degree-0/1 vertices and
/// smooth degree-2 vertices until minimum degree >= 3 (or nothing is
/// left). Smoothing a vertex whose two neighbors are already adjacent
/// drops the would-be parallel edge and the vertex.
SimpleGraph reduce_pair(const SimpleGraph& g, int a, int b);

/// Smooth degree-2 vertices only (no degree-0/1 removal); used for the
/// homeomorphism test.
SimpleGraph smooth_degree_two(const SimpleGraph& g);

/// Count-equation bookkeeping for one vertex pair.
struct ReductionLedger {
  std::pair<int, int> pair;
  int ne;         // |E(a) u E(b)|
  int nv3;        // |V_3(a)| + |V_3(b)| - |V_3(a,b)|
  int v4;         // |V_4(a,b)|
  int vy;         // |V_Y(a,b)|
  int predicted;  // edges - ne - (nv3 + v4 + vy)
  int actual;     // |E| of reduce_pair(g,a,b)
  bool degenerate;
  // Soft regime check: 22 edges, min degree >= 3, triangle-free. Outside
  // the regime the ledger is still computed but its invariants need not
  // hold.
  bool in_regime;
};

ReductionLedger pair_ledger(const SimpleGraph& g, int a, int b);

/// The x/y/z/u/w partition of V(a) u V(b) around a distance-2 pair, plus
/// the boundary profile of H = the subgraph on the edges incident to
/// V(a) u {b}.
struct PairNeighborhoodProfile {
  std::pair<int, int> pair;
  int dist;
  int x;  // common neighbors of degree 3
  int y;  // common neighbors of degree 4
  int z;  // common neighbors of degree 5
  int ua, ub;
  std::optional<int> wa, wb;          // only meaningful at dist 2
  std::vector<int> boundary_degrees;  // [V-bar(H)], descending
  int extra_edges;                    // |E-bar(H)|
};

PairNeighborhoodProfile neighborhood_partition(const SimpleGraph& g, int a,
                                               int b);

}  // namespace ikg
