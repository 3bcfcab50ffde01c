#pragma once

#include "ikg/graph.hpp"

namespace ikg {

/// Exact planarity. Instances here have at most ~14 vertices, so a
/// face-growth (Demoucron) test per biconnected block is plenty.
bool is_planar(const SimpleGraph& g);

/// Suppress all degree-2 vertices (smoothing; parallels produced by a
/// smoothing are dropped, as in the reduction fixpoint) and test
/// isomorphism with K_{3,3}.
bool is_homeomorphic_to_k33(const SimpleGraph& g);

struct Prop21Outcome {
  enum class Kind { EdgeBudget, NinePlanar, PlanarDirect, NotApplicable };
  Kind kind;
  int reduced_edges;

  bool eliminates() const { return kind != Kind::NotApplicable; }
};

const char* to_string(Prop21Outcome::Kind k);

/// Classify the pair reduction of g at (a,b): <= 8 edges, 9 edges and not
/// homeomorphic to K_{3,3}, or planar by direct test. Any kind other than
/// NotApplicable certifies that g is not intrinsically knotted.
Prop21Outcome prop21(const SimpleGraph& g, int a, int b);

}  // namespace ikg
