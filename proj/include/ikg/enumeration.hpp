#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "ikg/canonical.hpp"
#include "ikg/graph.hpp"

namespace ikg {

enum class DegreeProfile { Any, MaxDegAtLeast6, MaxDeg5WithAtLeastTwoDeg5 };

/// A generation regime: connected simple graphs with a fixed edge count,
/// a minimum degree, optional triangle-freeness, and a degree profile.
struct Regime {
  int edge_count = 22;
  int min_degree = 3;
  bool triangle_free = true;
  bool connected = true;
  DegreeProfile profile = DegreeProfile::Any;
  // Optional extra predicate on descending degree sequences.
  std::function<bool(const std::vector<int>&)> custom;

  bool sequence_admissible(const std::vector<int>& d) const;
};

/// All descending degree sequences that could be realized in the regime:
/// sum 2*edge_count, entries >= min_degree, graphical (Erdos-Gallai),
/// profile satisfied, and (for triangle-free regimes) the neighborhood of
/// a maximum-degree vertex must fit in the edge budget.
std::vector<std::vector<int>> feasible_degree_sequences(const Regime& r);

struct EnumerationStats {
  uint64_t emitted = 0;
  uint64_t search_nodes = 0;
  bool truncated = false;
};

/// Exhaustive isomorphism-free generation: the sink receives exactly one
/// labeled representative per isomorphism class in the regime. With
/// jobs > 1 the sink is called concurrently from worker threads and must
/// be thread-safe; emission order is schedule-dependent.
///
/// node_budget = 0 means unlimited. A nonzero budget may truncate the
/// stream; truncation is reported, never silent.
EnumerationStats enumerate_regime(
    const Regime& r, int jobs,
    const std::function<void(const SimpleGraph&)>& sink,
    uint64_t node_budget = 0);

/// Deterministic convenience wrapper: all classes, sorted by canonical
/// form.
std::vector<SimpleGraph> enumerate_sorted(const Regime& r, int jobs = 1);

/// Exhaustive oracle over labeled graphs on a fixed small order:
/// canonical forms of all graphs with the given edge count passing the
/// predicate. Order <= 7 runs a full bitmask sweep; 8 and 9 use a pruned
/// DFS; anything larger is refused (OracleTooLarge).
std::set<CanonicalForm> brute_force_all(
    int order, int edge_count,
    const std::function<bool(const SimpleGraph&)>& predicate);

}  // namespace ikg
