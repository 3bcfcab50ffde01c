#include "ikg/graph.hpp"

#include <algorithm>
#include <bit>

namespace ikg {

SimpleGraph SimpleGraph::empty(int order) {
  if (order < 0 || order > kMaxOrder)
    throw GraphError(Err::BadVertex,
                     "order out of range: " + std::to_string(order));
  return SimpleGraph(order);
}

SimpleGraph SimpleGraph::from_edges(int order, const std::vector<Edge>& edges) {
  SimpleGraph g = empty(order);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw GraphError(Err::BadVertex, "edge endpoint out of range");
    if (u == v)
      throw GraphError(Err::InvalidEdge,
                       "loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v))
      throw GraphError(Err::DuplicateEdge, "duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

void SimpleGraph::add_edge(int u, int v) {
  adj_[u] |= 1u << v;
  adj_[v] |= 1u << u;
  ++edge_count_;
}

void SimpleGraph::remove_edge(int u, int v) {
  adj_[u] &= ~(1u << v);
  adj_[v] &= ~(1u << u);
  --edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order_; ++u) {
    uint32_t later = adj_[u] >> (u + 1) << (u + 1);
    while (later) {
      int v = std::countr_zero(later);
      later &= later - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> degree_sequence(const SimpleGraph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

bool is_triangle_free(const SimpleGraph& g) {
  // An edge uv lies on a triangle iff u and v share a neighbor.
  for (int u = 0; u < g.order(); ++u) {
    uint32_t later = g.neighbors(u) >> (u + 1) << (u + 1);
    while (later) {
      int v = std::countr_zero(later);
      later &= later - 1;
      if (g.neighbors(u) & g.neighbors(v)) return false;
    }
  }
  return true;
}

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  uint32_t seen = 1u;
  uint32_t frontier = 1u;
  while (frontier) {
    uint32_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v) & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return seen == (g.order() >= 32 ? ~0u : (1u << g.order()) - 1u);
}

SimpleGraph contract_edge(const SimpleGraph& g, Edge e) {
  auto [u, v] = e;
  if (!g.has_edge(u, v))
    throw GraphError(Err::NotAnEdge, "contract_edge: not an edge");
  if (u > v) std::swap(u, v);
  // Merge v into u, then compact v away.
  SimpleGraph h = SimpleGraph::empty(g.order() - 1);
  auto newid = [&](int w) { return w < v ? w : w - 1; };
  for (auto [a, b] : g.edges()) {
    int x = a == v ? u : a;
    int y = b == v ? u : b;
    if (x == y) continue;  // the contracted edge itself
    int nx = newid(x), ny = newid(y);
    if (!h.has_edge(nx, ny)) h.add_edge(nx, ny);  // parallels merge
  }
  return h;
}

SimpleGraph delete_vertex(const SimpleGraph& g, int v) {
  if (!g.has_vertex(v))
    throw GraphError(Err::BadVertex, "delete_vertex: no such vertex");
  SimpleGraph h = SimpleGraph::empty(g.order() - 1);
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    h.add_edge(a < v ? a : a - 1, b < v ? b : b - 1);
  }
  return h;
}

SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
  auto [u, v] = e;
  if (!g.has_edge(u, v))
    throw GraphError(Err::NotAnEdge, "delete_edge: not an edge");
  SimpleGraph h = g;
  h.remove_edge(u, v);
  return h;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph h = SimpleGraph::empty(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, uint32_t mask) {
  std::vector<int> newid(g.order(), -1);
  int k = 0;
  for (int v = 0; v < g.order(); ++v)
    if (mask >> v & 1u) newid[v] = k++;
  SimpleGraph h = SimpleGraph::empty(k);
  for (auto [u, v] : g.edges())
    if (newid[u] >= 0 && newid[v] >= 0) h.add_edge(newid[u], newid[v]);
  return h;
}

}  // namespace ikg
