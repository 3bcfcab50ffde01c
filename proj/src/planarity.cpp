#include "ikg/planarity.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "ikg/canonical.hpp"
#include "ikg/catalog.hpp"
#include "ikg/reduction.hpp"

namespace ikg {
namespace {

// Demoucron-style planar embedding growth for a biconnected graph: start
// from a cycle, repeatedly embed a path of some fragment into a face whose
// boundary contains all of the fragment's attachments. A fragment with no
// admissible face witnesses non-planarity; one with a single admissible
// face is forced and handled first.
class Demoucron {
 public:
  explicit Demoucron(const SimpleGraph& g) : g_(g), n_(g.order()) {
    emb_adj_.assign(n_, 0);
  }

  bool run() {
    if (g_.edge_count() <= 8) return true;
    if (g_.edge_count() > 3 * n_ - 6) return false;
    std::vector<int> cycle = find_cycle();
    if (cycle.empty()) return true;  // forest
    for (size_t i = 0; i < cycle.size(); ++i)
      embed_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    for (int v : cycle) embedded_ |= 1u << v;
    faces_.push_back(cycle);
    faces_.push_back(cycle);

    while (true) {
      auto fragments = compute_fragments();
      if (fragments.empty()) return true;
      int forced = -1;
      for (size_t i = 0; i < fragments.size(); ++i) {
        int count = admissible_count(fragments[i].attachments);
        if (count == 0) return false;
        if (count == 1 && forced < 0) forced = static_cast<int>(i);
      }
      const Fragment& frag = fragments[forced < 0 ? 0 : forced];
      int face = first_admissible(frag.attachments);
      embed_fragment_path(frag, face);
    }
  }

 private:
  struct Fragment {
    uint32_t interior = 0;     // non-embedded vertices of the fragment
    uint32_t attachments = 0;  // embedded vertices it touches
    Edge chord{-1, -1};        // set when the fragment is a single edge
  };

  void embed_edge(int u, int v) { emb_adj_[u] |= 1u << v, emb_adj_[v] |= 1u << u; }
  bool edge_embedded(int u, int v) const { return emb_adj_[u] >> v & 1u; }

  std::vector<int> find_cycle() const {
    // DFS until a back edge closes a cycle.
    std::vector<int> parent(n_, -2);
    for (int root = 0; root < n_; ++root) {
      if (parent[root] != -2) continue;
      std::vector<int> stack{root};
      parent[root] = -1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        uint32_t nb = g_.neighbors(v);
        while (nb) {
          int w = std::countr_zero(nb);
          nb &= nb - 1;
          if (w == parent[v]) continue;
          if (parent[w] == -2) {
            parent[w] = v;
            stack.push_back(w);
          } else {
            // Found vertices v,w both reached; walk parents to build the
            // cycle through the tree paths. Use ancestor chain of v and w.
            std::vector<int> pv, pw;
            for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
            for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
            // Find lowest common ancestor.
            std::vector<char> onv(n_, 0);
            for (int x : pv) onv[x] = 1;
            int lca = -1;
            for (int x : pw)
              if (onv[x]) {
                lca = x;
                break;
              }
            if (lca < 0) continue;
            std::vector<int> cyc;
            for (int x = v; x != lca; x = parent[x]) cyc.push_back(x);
            cyc.push_back(lca);
            std::vector<int> side;
            for (int x = w; x != lca; x = parent[x]) side.push_back(x);
            std::reverse(side.begin(), side.end());
            for (int x : side) cyc.push_back(x);
            if (cyc.size() >= 3) return cyc;
          }
        }
      }
    }
    return {};
  }

  std::vector<Fragment> compute_fragments() const {
    std::vector<Fragment> out;
    // Chords: non-embedded edges between embedded vertices.
    for (auto [u, v] : g_.edges()) {
      if ((embedded_ >> u & 1u) && (embedded_ >> v & 1u) &&
          !edge_embedded(u, v)) {
        Fragment f;
        f.attachments = (1u << u) | (1u << v);
        f.chord = {u, v};
        out.push_back(f);
      }
    }
    // Components of G minus embedded vertices, with their attachments.
    uint32_t left = ((n_ >= 32 ? ~0u : (1u << n_) - 1u)) & ~embedded_;
    while (left) {
      int s = std::countr_zero(left);
      uint32_t comp = 1u << s;
      uint32_t frontier = comp;
      while (frontier) {
        uint32_t next = 0;
        while (frontier) {
          int v = std::countr_zero(frontier);
          frontier &= frontier - 1;
          next |= g_.neighbors(v) & ~embedded_ & ~comp;
        }
        comp |= next;
        frontier = next;
      }
      left &= ~comp;
      Fragment f;
      f.interior = comp;
      uint32_t att = 0;
      uint32_t cm = comp;
      while (cm) {
        int v = std::countr_zero(cm);
        cm &= cm - 1;
        att |= g_.neighbors(v) & embedded_;
      }
      f.attachments = att;
      if (att) out.push_back(f);
    }
    return out;
  }

  uint32_t face_mask(const std::vector<int>& face) const {
    uint32_t m = 0;
    for (int v : face) m |= 1u << v;
    return m;
  }

  int admissible_count(uint32_t attachments) const {
    int c = 0;
    for (const auto& f : faces_)
      if ((attachments & ~face_mask(f)) == 0) ++c;
    return c;
  }

  int first_admissible(uint32_t attachments) const {
    for (size_t i = 0; i < faces_.size(); ++i)
      if ((attachments & ~face_mask(faces_[i])) == 0) return i;
    return -1;
  }

  // Path between two distinct attachments whose edges all belong to the
  // fragment: leave u into the interior, walk the interior, exit at
  // another attachment.
  std::vector<int> fragment_path(const Fragment& frag) const {
    if (frag.chord.first >= 0) return {frag.chord.first, frag.chord.second};
    int u = std::countr_zero(frag.attachments);
    uint32_t other_att = frag.attachments & ~(1u << u);
    std::vector<int> prev(n_, -1);
    std::vector<int> queue;
    uint32_t seen = 0;
    uint32_t start = g_.neighbors(u) & frag.interior;
    while (start) {
      int w = std::countr_zero(start);
      start &= start - 1;
      seen |= 1u << w;
      prev[w] = u;
      queue.push_back(w);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      uint32_t exits = g_.neighbors(v) & other_att;
      if (exits) {
        int w = std::countr_zero(exits);
        std::vector<int> path{w};
        for (int x = v; x != -1; x = prev[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
      }
      uint32_t nb = g_.neighbors(v) & frag.interior & ~seen;
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        seen |= 1u << w;
        prev[w] = v;
        queue.push_back(w);
      }
    }
    return {};  // unreachable in a biconnected graph
  }

  void embed_fragment_path(const Fragment& frag, int face_idx) {
    std::vector<int> path = fragment_path(frag);
    for (size_t i = 0; i + 1 < path.size(); ++i)
      embed_edge(path[i], path[i + 1]);
    for (size_t i = 1; i + 1 < path.size(); ++i) embedded_ |= 1u << path[i];

    std::vector<int> face = faces_[face_idx];
    int u = path.front(), w = path.back();
    size_t pu = std::find(face.begin(), face.end(), u) - face.begin();
    size_t pw = std::find(face.begin(), face.end(), w) - face.begin();
    // Arc from u forward to w, and from w forward to u (cyclically).
    auto arc = [&](size_t from, size_t to) {
      std::vector<int> a;
      for (size_t i = from; i != to; i = (i + 1) % face.size())
        a.push_back(face[i]);
      a.push_back(face[to]);
      return a;
    };
    std::vector<int> a1 = arc(pu, pw);  // u .. w
    std::vector<int> a2 = arc(pw, pu);  // w .. u
    std::vector<int> f1 = a1, f2 = a2;
    for (size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
    for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
    faces_[face_idx] = std::move(f1);
    faces_.push_back(std::move(f2));
  }

  const SimpleGraph& g_;
  int n_;
  uint32_t embedded_ = 0;
  std::vector<uint32_t> emb_adj_;
  std::vector<std::vector<int>> faces_;
};

// Biconnected components as edge lists (standard lowpoint DFS).
std::vector<std::vector<Edge>> biconnected_components(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> comps;
  int counter = 0;

  struct Frame {
    int v;
    uint32_t todo;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::vector<Frame> dfs;
    num[root] = low[root] = counter++;
    dfs.push_back({root, g.neighbors(root)});
    while (!dfs.empty()) {
      Frame& fr = dfs.back();
      if (fr.todo) {
        int w = std::countr_zero(fr.todo);
        fr.todo &= fr.todo - 1;
        int v = fr.v;
        if (num[w] < 0) {
          stack.push_back({v, w});
          parent[w] = v;
          num[w] = low[w] = counter++;
          dfs.push_back({w, g.neighbors(w)});
        } else if (w != parent[v] && num[w] < num[v]) {
          stack.push_back({v, w});
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        int w = fr.v;
        dfs.pop_back();
        if (dfs.empty()) continue;
        int v = dfs.back().v;
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) {
          // Everything above and including (v,w) on the edge stack is one
          // biconnected component.
          std::vector<Edge> comp;
          while (!stack.empty()) {
            Edge e = stack.back();
            stack.pop_back();
            comp.push_back(e);
            if (e.first == v && e.second == w) break;
          }
          comps.push_back(std::move(comp));
        }
      }
    }
  }
  return comps;
}

}  // namespace

bool is_planar(const SimpleGraph& g) {
  if (g.edge_count() <= 8) return true;  // K_{3,3} is the smallest non-planar
  if (g.order() >= 3 && g.edge_count() > 3 * g.order() - 6) return false;
  for (const auto& comp : biconnected_components(g)) {
    uint32_t verts = 0;
    for (auto [u, v] : comp) verts |= (1u << u) | (1u << v);
    std::vector<int> newid(g.order(), -1);
    int k = 0;
    for (int v = 0; v < g.order(); ++v)
      if (verts >> v & 1u) newid[v] = k++;
    SimpleGraph block = SimpleGraph::empty(k);
    for (auto [u, v] : comp) block.add_edge(newid[u], newid[v]);
    if (!Demoucron(block).run()) return false;
  }
  return true;
}

bool is_homeomorphic_to_k33(const SimpleGraph& g) {
  SimpleGraph h = smooth_degree_two(g);
  if (h.order() != 6 || h.edge_count() != 9) return false;
  static const CanonicalForm k33 = canonicalize(build("K33").graph);
  return canonicalize(h) == k33;
}

const char* to_string(Prop21Outcome::Kind k) {
  switch (k) {
    case Prop21Outcome::Kind::EdgeBudget: return "EdgeBudget";
    case Prop21Outcome::Kind::NinePlanar: return "NinePlanar";
    case Prop21Outcome::Kind::PlanarDirect: return "PlanarDirect";
    case Prop21Outcome::Kind::NotApplicable: return "NotApplicable";
  }
  return "?";
}

Prop21Outcome prop21(const SimpleGraph& g, int a, int b) {
  SimpleGraph r = reduce_pair(g, a, b);
  int m = r.edge_count();
  if (m <= 8) return {Prop21Outcome::Kind::EdgeBudget, m};
  if (m == 9 && !is_homeomorphic_to_k33(r))
    return {Prop21Outcome::Kind::NinePlanar, m};
  if (is_planar(r)) return {Prop21Outcome::Kind::PlanarDirect, m};
  return {Prop21Outcome::Kind::NotApplicable, m};
}

}  // namespace ikg
