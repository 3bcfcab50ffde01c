// Test-only oracles, kept independent of the library implementations they
// check: a brute-force Kuratowski-subdivision planarity test, a naive
// adjacency-list reimplementation of the pair reduction with controllable
// processing order, and small random-graph helpers.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg::oracle {

namespace detail {

// Connect pairs[idx..] by vertex-disjoint paths whose interiors avoid
// branch vertices and previously used interiors. Tries every path, so a
// bad early choice cannot mask a valid assignment.
inline bool connect_pairs(const SimpleGraph& g, uint32_t branch,
                          const std::vector<Edge>& pairs, size_t idx,
                          uint32_t used) {
  if (idx == pairs.size()) return true;
  auto [s, t] = pairs[idx];
  // Enumerate every simple path from s to t; a greedy choice could block
  // later pairs.
  struct Rec {
    const SimpleGraph& g;
    uint32_t branch, used;
    const std::vector<Edge>& pairs;
    size_t idx;
    int t;

    bool extend(int cur, uint32_t interior) {
      uint32_t nb = g.neighbors(cur);
      if (nb >> t & 1u) {
        if (connect_pairs(g, branch, pairs, idx + 1, used | interior))
          return true;
      }
      uint32_t cand = nb & ~branch & ~used & ~interior;
      while (cand) {
        int w = __builtin_ctz(cand);
        cand &= cand - 1;
        if (extend(w, interior | (1u << w))) return true;
      }
      return false;
    }
  };
  Rec rec{g, branch, used, pairs, idx, t};
  return rec.extend(s, 0);
}

}  // namespace detail

inline bool has_k5_subdivision(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> verts;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 4) verts.push_back(v);
  int k = static_cast<int>(verts.size());
  if (k < 5) return false;
  // Enumerate 5-subsets of candidate branch vertices.
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int d = b + 1; d < k; ++d)
        for (int e = d + 1; e < k; ++e)
          for (int f = e + 1; f < k; ++f) {
            int bs[5] = {verts[a], verts[b], verts[d], verts[e], verts[f]};
            uint32_t branch = 0;
            for (int v : bs) branch |= 1u << v;
            std::vector<Edge> pairs;
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j) pairs.emplace_back(bs[i], bs[j]);
            if (detail::connect_pairs(g, branch, pairs, 0, 0)) return true;
          }
  return false;
}

inline bool has_k33_subdivision(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> verts;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) verts.push_back(v);
  int k = static_cast<int>(verts.size());
  if (k < 6) return false;
  // 6-subsets then 3|3 bipartitions (fix smallest on the left: 10 splits).
  std::vector<int> sel;
  auto subsets = [&](auto&& self, int start, int depth) -> bool {
    if (depth == 6) {
      int bs[6];
      for (int i = 0; i < 6; ++i) bs[i] = verts[sel[i]];
      uint32_t branch = 0;
      for (int v : bs) branch |= 1u << v;
      static const int splits[10][2] = {{1, 2}, {1, 3}, {1, 4}, {1, 5},
                                        {2, 3}, {2, 4}, {2, 5}, {3, 4},
                                        {3, 5}, {4, 5}};
      for (auto& sp : splits) {
        bool inA[6] = {true, false, false, false, false, false};
        for (int i : sp) inA[i] = true;
        std::vector<int> A, B;
        for (int i = 0; i < 6; ++i) (inA[i] ? A : B).push_back(bs[i]);
        if (A.size() != 3) continue;
        std::vector<Edge> pairs;
        for (int x : A)
          for (int y : B) pairs.emplace_back(x, y);
        if (detail::connect_pairs(g, branch, pairs, 0, 0)) return true;
      }
      return false;
    }
    for (int i = start; i <= k - (6 - depth); ++i) {
      sel.push_back(i);
      if (self(self, i + 1, depth + 1)) return true;
      sel.pop_back();
    }
    return false;
  };
  return subsets(subsets, 0, 0);
}

/// Planarity by Kuratowski's theorem, exhaustive subdivision search.
inline bool planar_by_subdivision(const SimpleGraph& g) {
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

/// Naive pair reduction on adjacency lists, processing degree-<=2
/// vertices in the order given by a permutation seed. Mirrors the
/// documented fixpoint rules but shares no code with reduce_pair.
inline SimpleGraph naive_reduce_pair(const SimpleGraph& g, int a, int b,
                                     unsigned order_seed = 0) {
  int n = g.order();
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> alive(n, true);
  auto kill = [&](int v) {
    for (int u : adj[v]) adj[u].erase(v);
    adj[v].clear();
    alive[v] = false;
  };
  kill(a);
  kill(b);
  std::vector<int> scan(n);
  for (int i = 0; i < n; ++i) scan[i] = i;
  std::mt19937 rng(order_seed);
  bool changed = true;
  while (changed) {
    changed = false;
    std::shuffle(scan.begin(), scan.end(), rng);
    for (int v : scan) {
      if (!alive[v]) continue;
      if (adj[v].size() <= 1) {
        kill(v);
        changed = true;
        break;
      }
      if (adj[v].size() == 2) {
        int p = *adj[v].begin();
        int q = *std::next(adj[v].begin());
        kill(v);
        if (!adj[p].count(q)) {
          adj[p].insert(q);
          adj[q].insert(p);
        }
        changed = true;
        break;
      }
    }
  }
  std::vector<int> newid(n, -1);
  int k = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) newid[v] = k++;
  SimpleGraph h = SimpleGraph::empty(k);
  for (int v = 0; v < n; ++v)
    for (int u : adj[v])
      if (v < u) h.add_edge(newid[v], newid[u]);
  return h;
}

/// Uniform random graph with exactly m edges on n vertices (seeded).
inline SimpleGraph random_graph(int n, int m, std::mt19937& rng) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  return SimpleGraph::from_edges(n, all);
}

/// Random permutation of vertex labels (seeded).
inline SimpleGraph random_relabel(const SimpleGraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace ikg::oracle
