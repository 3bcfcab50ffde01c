#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ikg {

// All workloads here live on small graphs: candidates have <= 14 vertices,
// family members stay under 20. 32 leaves headroom and keeps neighbor sets
// in single machine words.
inline constexpr int kMaxOrder = 32;

enum class Err {
  InvalidEdge,
  DuplicateEdge,
  BadVertex,
  NotAnEdge,
  SamePair,
  NotATriangle,
  NotAYVertex,
  WouldCreateParallel,
  UnknownGraph,
  NoWitness,
  ParseError,
  OracleTooLarge,
  ClosureBudget,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

using Edge = std::pair<int, int>;

/// Loopless undirected simple graph on vertex indices 0..order-1.
/// Immutable value type; neighbor sets are bitmasks, so structural
/// predicates are a handful of word operations.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  static SimpleGraph from_edges(int order, const std::vector<Edge>& edges);

  /// Empty (edgeless) graph on `order` vertices.
  static SimpleGraph empty(int order);

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }

  bool has_vertex(int v) const { return v >= 0 && v < order_; }
  bool has_edge(int u, int v) const {
    return has_vertex(u) && has_vertex(v) && (adj_[u] >> v & 1u);
  }
  uint32_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return __builtin_popcount(adj_[v]); }

  /// Edges as (u,v) with u < v, lexicographic.
  std::vector<Edge> edges() const;

  bool operator==(const SimpleGraph& o) const = default;

  // Mutators are only for construction sites inside the library and the
  // enumeration search; callers see graphs as values.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

 private:
  explicit SimpleGraph(int order) : order_(order) { adj_.fill(0); }

  int order_ = 0;
  int edge_count_ = 0;
  std::array<uint32_t, kMaxOrder> adj_{};
};

/// Degrees sorted descending; length = order, sum = 2*edge_count.
std::vector<int> degree_sequence(const SimpleGraph& g);

bool is_triangle_free(const SimpleGraph& g);

/// Standard connectivity; the empty graph counts as connected (reductions
/// can annihilate a graph entirely).
bool is_connected(const SimpleGraph& g);

/// Merge the endpoints of edge e; drop the loop, merge parallels.
/// Order decreases by one.
SimpleGraph contract_edge(const SimpleGraph& g, Edge e);

/// Delete v and its incident edges; remaining vertices are re-indexed by
/// order-preserving compaction.
SimpleGraph delete_vertex(const SimpleGraph& g, int v);

SimpleGraph delete_edge(const SimpleGraph& g, Edge e);

/// Apply vertex relabeling: vertex v of g becomes perm[v] of the result.
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm);

/// Induced subgraph on the vertices in `mask`, compacted in index order.
SimpleGraph induced_subgraph(const SimpleGraph& g, uint32_t mask);

}  // namespace ikg
