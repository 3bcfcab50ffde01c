#include "ikg/reduction.hpp"

#include <algorithm>
#include <bit>

namespace ikg {
namespace {

struct Scratch {
  std::array<uint32_t, kMaxOrder> adj;
  uint32_t alive;
  int n;
  bool merged_parallel = false;

  explicit Scratch(const SimpleGraph& g) : n(g.order()) {
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    alive = n >= 32 ? ~0u : (1u << n) - 1u;
  }

  int degree(int v) const { return std::popcount(adj[v]); }

  void kill(int v) {
    uint32_t nb = adj[v];
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      adj[u] &= ~(1u << v);
    }
    adj[v] = 0;
    alive &= ~(1u << v);
  }

  // One pass of the fixpoint; returns true if anything changed.
  bool step() {
    uint32_t m = alive;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int d = degree(v);
      if (d <= 1) {
        kill(v);
        return true;
      }
      if (d == 2) {
        int p = std::countr_zero(adj[v]);
        int q = std::countr_zero(adj[v] & (adj[v] - 1));
        if (adj[p] >> q & 1u) {
          merged_parallel = true;  // smoothing would double the edge pq
          kill(v);
        } else {
          kill(v);
          adj[p] |= 1u << q;
          adj[q] |= 1u << p;
        }
        return true;
      }
    }
    return false;
  }

  SimpleGraph compact() const {
    std::vector<int> newid(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v)
      if (alive >> v & 1u) newid[v] = k++;
    SimpleGraph h = SimpleGraph::empty(k);
    for (int v = 0; v < n; ++v) {
      if (!(alive >> v & 1u)) continue;
      uint32_t later = adj[v] & ~((2u << v) - 1u);
      while (later) {
        int u = std::countr_zero(later);
        later &= later - 1;
        h.add_edge(newid[v], newid[u]);
      }
    }
    return h;
  }
};

SimpleGraph reduce_pair_traced(const SimpleGraph& g, int a, int b,
                               bool* merged) {
  if (a == b) throw GraphError(Err::SamePair, "reduce_pair: a == b");
  if (!g.has_vertex(a) || !g.has_vertex(b))
    throw GraphError(Err::BadVertex, "reduce_pair: missing vertex");
  Scratch s(g);
  s.kill(a);
  s.kill(b);
  while (s.step()) {
  }
  if (merged) *merged = s.merged_parallel;
  return s.compact();
}

}  // namespace

SimpleGraph reduce_pair(const SimpleGraph& g, int a, int b) {
  return reduce_pair_traced(g, a, b, nullptr);
}

SimpleGraph smooth_degree_two(const SimpleGraph& g) {
  Scratch s(g);
  bool changed = true;
  while (changed) {
    changed = false;
    uint32_t m = s.alive;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (s.degree(v) != 2) continue;
      int p = std::countr_zero(s.adj[v]);
      int q = std::countr_zero(s.adj[v] & (s.adj[v] - 1));
      s.kill(v);
      if (!(s.adj[p] >> q & 1u)) {
        s.adj[p] |= 1u << q;
        s.adj[q] |= 1u << p;
      }
      changed = true;
      break;
    }
  }
  return s.compact();
}

ReductionLedger pair_ledger(const SimpleGraph& g, int a, int b) {
  if (a == b) throw GraphError(Err::SamePair, "pair_ledger: a == b");
  if (!g.has_vertex(a) || !g.has_vertex(b))
    throw GraphError(Err::BadVertex, "pair_ledger: missing vertex");

  auto deg_neighbors = [&](int v, int d) {
    uint32_t out = 0, nb = g.neighbors(v);
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (g.degree(u) == d) out |= 1u << u;
    }
    return out;
  };

  ReductionLedger led{};
  led.pair = {a, b};
  led.ne = g.degree(a) + g.degree(b) - (g.has_edge(a, b) ? 1 : 0);
  uint32_t v3a = deg_neighbors(a, 3), v3b = deg_neighbors(b, 3);
  uint32_t v3ab = v3a & v3b;
  led.nv3 = std::popcount(v3a) + std::popcount(v3b) - std::popcount(v3ab);
  led.v4 = std::popcount(deg_neighbors(a, 4) & deg_neighbors(b, 4));

  // V_Y(a,b): vertices c with some d in V_3(a,b) such that c is a
  // degree-3 neighbor of d, c not in {a,b}. A set, so shared c count once.
  uint32_t vy_mask = 0;
  uint32_t ds = v3ab;
  while (ds) {
    int d = std::countr_zero(ds);
    ds &= ds - 1;
    vy_mask |= deg_neighbors(d, 3) & ~((1u << a) | (1u << b));
  }
  led.vy = std::popcount(vy_mask);

  led.predicted = g.edge_count() - led.ne - (led.nv3 + led.v4 + led.vy);
  bool merged = false;
  led.actual = reduce_pair_traced(g, a, b, &merged).edge_count();

  bool shared_v3ab_neighbor = false;
  for (int c = 0; c < g.order() && !shared_v3ab_neighbor; ++c)
    if (std::popcount(g.neighbors(c) & v3ab) >= 2) shared_v3ab_neighbor = true;
  led.degenerate = shared_v3ab_neighbor || merged;

  int min_deg = g.order() ? g.degree(0) : 0;
  for (int v = 0; v < g.order(); ++v) min_deg = std::min(min_deg, g.degree(v));
  led.in_regime =
      g.edge_count() == 22 && min_deg >= 3 && is_triangle_free(g);
  return led;
}

PairNeighborhoodProfile neighborhood_partition(const SimpleGraph& g, int a,
                                               int b) {
  if (a == b) throw GraphError(Err::SamePair, "neighborhood_partition");
  if (!g.has_vertex(a) || !g.has_vertex(b))
    throw GraphError(Err::BadVertex, "neighborhood_partition");

  // BFS distance a -> b.
  int dist = -1;
  {
    std::vector<int> d(g.order(), -1);
    d[a] = 0;
    std::vector<int> q{a};
    for (size_t i = 0; i < q.size(); ++i) {
      uint32_t nb = g.neighbors(q[i]);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (d[w] < 0) {
          d[w] = d[q[i]] + 1;
          q.push_back(w);
        }
      }
    }
    dist = d[b];
  }

  auto common_of_degree = [&](int deg) {
    uint32_t c = g.neighbors(a) & g.neighbors(b);
    uint32_t out = 0;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      if (g.degree(v) == deg) out |= 1u << v;
    }
    return out;
  };
  auto v3_of = [&](int v) {
    uint32_t out = 0, nb = g.neighbors(v);
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (g.degree(u) == 3) out |= 1u << u;
    }
    return out;
  };

  PairNeighborhoodProfile p{};
  p.pair = {a, b};
  p.dist = dist;
  uint32_t x_mask = common_of_degree(3);
  p.x = std::popcount(x_mask);
  p.y = std::popcount(common_of_degree(4));
  p.z = std::popcount(common_of_degree(5));
  p.ua = std::popcount(v3_of(a) & ~x_mask);
  p.ub = std::popcount(v3_of(b) & ~x_mask);
  if (dist == 2) {
    p.wa = std::popcount(g.neighbors(a) & ~v3_of(a) & ~g.neighbors(b) &
                         ~(1u << b));
    p.wb = std::popcount(g.neighbors(b) & ~v3_of(b) & ~g.neighbors(a) &
                         ~(1u << a));
  }

  // Boundary of H = subgraph on the edges incident to V(a) u {b}:
  // the vertices beyond {a,b} u V(a), listed by descending degree, and
  // the edges of G not in H (both endpoints beyond V(a) u {b}).
  uint32_t core = (1u << a) | (1u << b) | g.neighbors(a);
  for (int v = 0; v < g.order(); ++v)
    if (!(core >> v & 1u)) p.boundary_degrees.push_back(g.degree(v));
  std::sort(p.boundary_degrees.rbegin(), p.boundary_degrees.rend());
  uint32_t outside = ~(g.neighbors(a) | (1u << b));
  int extra = 0;
  for (auto [u, v] : g.edges())
    if ((outside >> u & 1u) && (outside >> v & 1u)) ++extra;
  p.extra_edges = extra;
  return p;
}

}  // namespace ikg
