#include "ikg/moves.hpp"

#include <algorithm>
#include <bit>

#include "ikg/graph6.hpp"

namespace ikg {

std::vector<std::array<int, 3>> triangles(const SimpleGraph& g) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < g.order(); ++i) {
    uint32_t ni = g.neighbors(i) >> (i + 1) << (i + 1);
    uint32_t js = ni;
    while (js) {
      int j = std::countr_zero(js);
      js &= js - 1;
      uint32_t ks = g.neighbors(i) & g.neighbors(j);
      ks = ks >> (j + 1) << (j + 1);
      while (ks) {
        int k = std::countr_zero(ks);
        ks &= ks - 1;
        out.push_back({i, j, k});
      }
    }
  }
  return out;
}

SimpleGraph triangle_y(const SimpleGraph& g, std::array<int, 3> t) {
  auto [a, b, c] = t;
  if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c))
    throw GraphError(Err::NotATriangle, "triangle_y: not a triangle");
  SimpleGraph h = SimpleGraph::empty(g.order() + 1);
  for (auto [u, v] : g.edges()) {
    bool in_t = (u == a || u == b || u == c) && (v == a || v == b || v == c);
    if (!in_t) h.add_edge(u, v);
  }
  int w = g.order();
  h.add_edge(w, a);
  h.add_edge(w, b);
  h.add_edge(w, c);
  return h;
}

bool can_y_triangle(const SimpleGraph& g, int v) {
  if (!g.has_vertex(v) || g.degree(v) != 3) return false;
  uint32_t nb = g.neighbors(v);
  uint32_t m = nb;
  while (m) {
    int u = std::countr_zero(m);
    m &= m - 1;
    if (g.neighbors(u) & nb) return false;
  }
  return true;
}

SimpleGraph y_triangle(const SimpleGraph& g, int v) {
  if (!g.has_vertex(v) || g.degree(v) != 3)
    throw GraphError(Err::NotAYVertex, "y_triangle: degree != 3");
  if (!can_y_triangle(g, v))
    throw GraphError(Err::WouldCreateParallel,
                     "y_triangle: neighbors not independent");
  std::vector<int> nb;
  uint32_t m = g.neighbors(v);
  while (m) {
    int u = std::countr_zero(m);
    m &= m - 1;
    nb.push_back(u > v ? u - 1 : u);
  }
  SimpleGraph h = delete_vertex(g, v);
  h.add_edge(nb[0], nb[1]);
  h.add_edge(nb[0], nb[2]);
  h.add_edge(nb[1], nb[2]);
  return h;
}

std::vector<MoveStep> FamilyClosure::provenance(const CanonicalForm& f) const {
  std::vector<MoveStep> steps;
  CanonicalForm cur = f;
  while (true) {
    auto it = members.find(cur);
    if (it == members.end())
      throw GraphError(Err::UnknownGraph, "provenance: not a member");
    if (!it->second.discovered_by) break;
    steps.push_back(*it->second.discovered_by);
    cur = it->second.discovered_by->parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

FamilyClosure family_closure(const SimpleGraph& seed, MoveSet moves,
                             size_t member_budget) {
  FamilyClosure fam;
  SimpleGraph rep = canonical_graph(seed);
  fam.seed = CanonicalForm{graph6_encode(rep)};
  fam.members.emplace(fam.seed, FamilyMember{rep, std::nullopt});

  // Layered BFS over canonical forms; each layer is processed in form
  // order (std::map iteration), so discovery provenance is deterministic.
  std::vector<CanonicalForm> frontier{fam.seed};
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<CanonicalForm> next;
    for (const auto& form : frontier) {
      const SimpleGraph& g = fam.members.at(form).graph;
      auto try_insert = [&](const SimpleGraph& h, MoveStep step) {
        SimpleGraph hrep = canonical_graph(h);
        CanonicalForm hf{graph6_encode(hrep)};
        if (fam.members.count(hf)) return;
        if (fam.members.size() >= member_budget) {
          fam.truncated = true;
          return;
        }
        fam.members.emplace(hf, FamilyMember{hrep, step});
        next.push_back(hf);
      };
      if (moves.triangle_y) {
        for (auto t : triangles(g))
          try_insert(triangle_y(g, t), MoveStep{Move::TriangleY, t, form});
      }
      if (moves.y_triangle) {
        for (int v = 0; v < g.order(); ++v)
          if (can_y_triangle(g, v))
            try_insert(y_triangle(g, v),
                       MoveStep{Move::YTriangle, {v, -1, -1}, form});
      }
      if (fam.truncated) break;
    }
    if (fam.truncated) break;
    frontier = std::move(next);
  }
  return fam;
}

std::vector<CanonicalForm> triangle_free_members(const FamilyClosure& f) {
  std::vector<CanonicalForm> out;
  for (const auto& [form, m] : f.members)
    if (is_triangle_free(m.graph)) out.push_back(form);
  return out;
}

}  // namespace ikg
