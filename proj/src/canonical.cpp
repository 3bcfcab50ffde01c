#include "ikg/canonical.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "ikg/graph6.hpp"

namespace ikg {
namespace {

// Individualization-refinement search for an exact canonical labeling.
// The certificate of a leaf is the column-major upper-triangle bit string
// of the relabeled graph; the canonical form is the minimum over all
// leaves of the search tree. Refinement is equivariant (cells are ordered
// only by structural counts), so isomorphic graphs reach identical
// certificate sets.
struct Canonicalizer {
  const SimpleGraph& g;
  int n;
  std::optional<std::vector<uint64_t>> best;
  std::vector<int> best_perm;

  explicit Canonicalizer(const SimpleGraph& graph)
      : g(graph), n(graph.order()) {}

  using Partition = std::vector<std::vector<int>>;

  // Equitable refinement: split cells by neighbor counts toward every
  // cell until stable. Sub-cells are ordered by ascending count, which
  // depends only on structure.
  void refine(Partition& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t s = 0; s < cells.size() && !changed; ++s) {
        uint32_t smask = 0;
        for (int v : cells[s]) smask |= 1u << v;
        for (size_t c = 0; c < cells.size() && !changed; ++c) {
          if (cells[c].size() <= 1) continue;
          int first_count = std::popcount(g.neighbors(cells[c][0]) & smask);
          bool uniform = true;
          for (int v : cells[c])
            if (std::popcount(g.neighbors(v) & smask) != first_count) {
              uniform = false;
              break;
            }
          if (uniform) continue;
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(cells[c].size());
          for (int v : cells[c])
            keyed.emplace_back(std::popcount(g.neighbors(v) & smask), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](auto& a, auto& b) { return a.first < b.first; });
          Partition next;
          next.reserve(cells.size() + 2);
          for (size_t i = 0; i < cells.size(); ++i) {
            if (i != c) {
              next.push_back(std::move(cells[i]));
              continue;
            }
            std::vector<int> cur;
            for (size_t k = 0; k < keyed.size(); ++k) {
              if (k > 0 && keyed[k].first != keyed[k - 1].first) {
                next.push_back(std::move(cur));
                cur.clear();
              }
              cur.push_back(keyed[k].second);
            }
            next.push_back(std::move(cur));
          }
          cells = std::move(next);
          changed = true;
        }
      }
    }
  }

  // Column-major upper-triangle bits of g relabeled by perm, packed into
  // words. perm[v] = position of vertex v.
  std::vector<uint64_t> certificate(const std::vector<int>& perm) const {
    std::vector<uint64_t> bits((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64,
                               0);
    std::vector<int> at(n);  // at[pos] = original vertex
    for (int v = 0; v < n; ++v) at[perm[v]] = v;
    size_t idx = 0;
    for (int c = 1; c < n; ++c)
      for (int r = 0; r < c; ++r, ++idx)
        if (g.has_edge(at[r], at[c])) bits[idx / 64] |= 1ull << (idx % 64);
    return bits;
  }

  void search(Partition cells) {
    refine(cells);
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      std::vector<int> perm(n);
      for (size_t i = 0; i < cells.size(); ++i) perm[cells[i][0]] = i;
      auto cert = certificate(perm);
      if (!best || cert < *best) {
        best = std::move(cert);
        best_perm = std::move(perm);
      }
      return;
    }
    for (size_t k = 0; k < cells[target].size(); ++k) {
      Partition child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({cells[target][k]});
        std::vector<int> rest;
        for (size_t j = 0; j < cells[target].size(); ++j)
          if (j != k) rest.push_back(cells[target][j]);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  std::vector<int> run() {
    if (n == 0) return {};
    // Initial partition: degree classes, descending degree first.
    std::vector<int> vs(n);
    for (int v = 0; v < n; ++v) vs[v] = v;
    std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
      return g.degree(a) > g.degree(b);
    });
    Partition cells;
    for (int v : vs) {
      if (!cells.empty() &&
          g.degree(cells.back().front()) == g.degree(v))
        cells.back().push_back(v);
      else
        cells.push_back({v});
    }
    search(std::move(cells));
    return best_perm;
  }
};

}  // namespace

SimpleGraph canonical_graph(const SimpleGraph& g) {
  Canonicalizer c(g);
  auto perm = c.run();
  if (g.order() == 0) return g;
  return relabel(g, perm);
}

CanonicalForm canonicalize(const SimpleGraph& g) {
  return CanonicalForm{graph6_encode(canonical_graph(g))};
}

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonicalize(a) == canonicalize(b);
}

}  // namespace ikg
