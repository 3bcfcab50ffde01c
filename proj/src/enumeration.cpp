#include "ikg/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "ikg/graph6.hpp"

namespace ikg {
namespace {

int max_triangle_free_edges(int n) { return n * n / 4; }

bool erdos_gallai(const std::vector<int>& d) {
  int n = static_cast<int>(d.size());
  long sum = 0;
  for (int x : d) sum += x;
  if (sum % 2) return false;
  long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += d[k - 1];
    long rhs = static_cast<long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

// In a triangle-free graph the neighborhood of a maximum-degree vertex is
// independent, so the edges at the vertex plus the neighbors' other edges
// are all distinct: m >= D + sum of (deg-1) over the D cheapest possible
// neighbors. Kills degree >= 8 at 22 edges.
bool triangle_free_budget_ok(const std::vector<int>& d, int m) {
  int delta = d[0];
  int n = static_cast<int>(d.size());
  if (delta > n - 1) return false;
  long need = delta;
  for (int i = 0; i < delta; ++i) need += d[n - 1 - i] - 1;
  return need <= m;
}

}  // namespace

bool Regime::sequence_admissible(const std::vector<int>& d) const {
  if (d.empty()) return edge_count == 0;
  long sum = 0;
  for (int x : d) {
    if (x < min_degree) return false;
    sum += x;
  }
  if (sum != 2L * edge_count) return false;
  switch (profile) {
    case DegreeProfile::Any:
      break;
    case DegreeProfile::MaxDegAtLeast6:
      if (d[0] < 6) return false;
      break;
    case DegreeProfile::MaxDeg5WithAtLeastTwoDeg5:
      if (d[0] != 5 || d.size() < 2 || d[1] != 5) return false;
      break;
  }
  if (custom && !custom(d)) return false;
  return true;
}

std::vector<std::vector<int>> feasible_degree_sequences(const Regime& r) {
  std::vector<std::vector<int>> out;
  int m = r.edge_count;
  if (m == 0) return out;
  int n_min = 1;
  while (n_min <= kMaxOrder) {
    int cap = r.triangle_free ? max_triangle_free_edges(n_min)
                              : n_min * (n_min - 1) / 2;
    if (cap >= m) break;
    ++n_min;
  }
  int n_max = kMaxOrder;
  if (r.min_degree > 0) n_max = std::min(n_max, 2 * m / r.min_degree);
  if (r.connected) n_max = std::min(n_max, m + 1);
  if (r.min_degree <= 0 && !r.connected)
    throw GraphError(Err::OracleTooLarge,
                     "unbounded regime: need min_degree >= 1 or connected");

  for (int n = n_min; n <= n_max; ++n) {
    // Descending partitions of 2m into n parts in [min_degree, n-1].
    std::vector<int> cur(n);
    auto rec = [&](auto&& self, int idx, int remaining, int hi) -> void {
      if (idx == n) {
        if (remaining != 0) return;
        if (!r.sequence_admissible(cur)) return;
        if (!erdos_gallai(cur)) return;
        if (r.triangle_free && !triangle_free_budget_ok(cur, m)) return;
        out.push_back(cur);
        return;
      }
      int slots = n - idx;
      for (int v = std::min(hi, remaining); v >= r.min_degree; --v) {
        // Remaining entries are at most v and at least min_degree.
        if (static_cast<long>(v) * (slots - 1) < remaining - v) break;
        if (static_cast<long>(r.min_degree) * (slots - 1) > remaining - v)
          continue;
        cur[idx] = v;
        self(self, idx + 1, remaining - v, v);
      }
    };
    rec(rec, 0, 2 * m, std::min(n - 1, 2 * m));
  }
  return out;
}

namespace {

// ---------------------------------------------------------------------
// Orderly generation per degree sequence.
//
// Vertices are placed one at a time in index order; placing vertex k
// decides its adjacency to 0..k-1, i.e. column k of the upper triangle in
// the column-major (graph6) bit order. A completed labeled graph is
// accepted iff its bit string is the maximum over all permutations that
// preserve the positional degree blocks, so each isomorphism class is
// emitted exactly once: as its maximal descending-degree labeling.
// ---------------------------------------------------------------------

struct SeqContext {
  std::vector<int> d;       // descending degree sequence
  std::vector<int> fsum;    // fsum[k] = sum of d[w] for w >= k
  std::vector<int> block;   // block[i]: index of i's equal-degree block
  std::vector<std::vector<int>> block_members;
  bool triangle_free = false;
  bool connected = true;
  int n = 0;

  explicit SeqContext(std::vector<int> seq, const Regime& r) : d(std::move(seq)) {
    n = static_cast<int>(d.size());
    triangle_free = r.triangle_free;
    connected = r.connected;
    fsum.assign(n + 1, 0);
    for (int k = n - 1; k >= 0; --k) fsum[k] = fsum[k + 1] + d[k];
    block.assign(n, 0);
    for (int i = 1; i < n; ++i)
      block[i] = d[i] == d[i - 1] ? block[i - 1] : block[i - 1] + 1;
    block_members.assign(block.empty() ? 0 : block[n - 1] + 1, {});
    for (int i = 0; i < n; ++i) block_members[block[i]].push_back(i);
  }
};

struct GenState {
  std::array<uint32_t, kMaxOrder> adj{};
  std::array<int8_t, kMaxOrder> rdeg{};  // degree still owed to later vertices
  int k = 0;                      // next vertex to place

  void init(const SeqContext& c) {
    adj.fill(0);
    for (int i = 0; i < c.n; ++i) rdeg[i] = static_cast<int8_t>(c.d[i]);
    k = 0;
  }
};

// Is the current labeling's bit string maximal over degree-block
// permutations? Assigns slots in order; any permutation whose partial
// column string exceeds the graph's own rejects the graph, branches that
// fall strictly below are pruned.
bool is_max_code(const SeqContext& c, const std::array<uint32_t, kMaxOrder>& adj) {
  int n = c.n;
  std::array<int, kMaxOrder> vert_at{};
  uint32_t used = 0;
  bool dominated = false;

  auto rec = [&](auto&& self, int slot) -> void {
    if (dominated) return;
    if (slot == n) return;  // an automorphism; equality all the way
    uint32_t col_g = adj[slot] & ((1u << slot) - 1u);
    for (int v : c.block_members[c.block[slot]]) {
      if (used >> v & 1u) continue;
      uint32_t col_p = 0;
      for (int j = 0; j < slot; ++j)
        col_p |= ((adj[v] >> vert_at[j]) & 1u) << j;
      uint32_t diff = col_p ^ col_g;
      if (diff) {
        // Lowest differing row is the most significant string position.
        if (col_p >> std::countr_zero(diff) & 1u) {
          dominated = true;
          return;
        }
        continue;
      }
      vert_at[slot] = v;
      used |= 1u << v;
      self(self, slot + 1);
      used &= ~(1u << v);
      if (dominated) return;
    }
  };
  rec(rec, 0);
  return !dominated;
}

bool connected_enough(const SeqContext& c, const std::array<uint32_t, kMaxOrder>& adj) {
  if (c.n == 0) return true;
  uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    uint32_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj[v] & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return seen == (1u << c.n) - 1u;
}

class SequenceSearch {
 public:
  SequenceSearch(const SeqContext& c,
                 const std::function<void(const SimpleGraph&)>& sink,
                 std::atomic<uint64_t>& nodes, uint64_t node_budget,
                 std::atomic<bool>& truncated)
      : c_(c),
        sink_(sink),
        nodes_(nodes),
        node_budget_(node_budget),
        truncated_(truncated) {}

  // Run to completion from a state, or collect states at depth
  // split_depth into `out` instead of descending past it.
  void run(GenState& s, int split_depth = -1,
           std::vector<GenState>* out = nullptr) {
    split_depth_ = split_depth;
    split_out_ = out;
    descend(s);
  }

  uint64_t emitted = 0;

 private:
  bool over_budget() {
    if (node_budget_ && nodes_.fetch_add(1, std::memory_order_relaxed) >=
                            node_budget_) {
      truncated_.store(true, std::memory_order_relaxed);
      return true;
    }
    if (!node_budget_) nodes_.fetch_add(1, std::memory_order_relaxed);
    return false;
  }

  void descend(GenState& s) {
    if (truncated_.load(std::memory_order_relaxed)) return;
    if (s.k == c_.n) {
      finish(s);
      return;
    }
    if (split_out_ && s.k == split_depth_) {
      split_out_->push_back(s);
      return;
    }
    if (over_budget()) return;
    choose_backset(s, 0, 0, 0);
  }

  // Choose vertex k's neighbors among 0..k-1, ascending, maintaining
  // independence when triangle-free.
  void choose_backset(GenState& s, int from, uint32_t chosen, int cnt) {
    const int k = s.k;
    // Vertices that still must get an edge now: remaining future slots
    // (including k) equal their owed degree.
    int slots_left = c_.n - k;
    for (int v = from; v < k; ++v)
      if (s.rdeg[v] == slots_left && !(chosen >> v & 1u)) {
        // v is forced into every completion from here on; if it cannot be
        // added (independence or capacity), this branch is dead.
        if (cnt >= c_.d[k]) return;
        if (c_.triangle_free && (s.adj[v] & chosen)) return;
        if (s.rdeg[v] <= 0) return;
        break;
      }

    if (try_complete(s, chosen, cnt)) {
    }
    if (cnt >= c_.d[k]) return;
    for (int v = from; v < k; ++v) {
      if (s.rdeg[v] <= 0) continue;
      if (c_.triangle_free && (s.adj[v] & chosen)) continue;
      // Forced-vertex dead-branch check: skipping a vertex that must be
      // picked now cannot succeed.
      choose_backset_pick(s, v, chosen, cnt);
      if (s.rdeg[v] == c_.n - s.k) return;  // v was forced; no skip branch
    }
  }

  void choose_backset_pick(GenState& s, int v, uint32_t chosen, int cnt) {
    choose_backset(s, v + 1, chosen | (1u << v), cnt + 1);
  }

  // chosen is a candidate back-set for vertex k; apply it, check
  // feasibility and dominance, recurse, undo.
  bool try_complete(GenState& s, uint32_t chosen, int cnt) {
    const int k = s.k;
    int rk = c_.d[k] - cnt;
    if (rk < 0) return false;
    if (rk > c_.n - 1 - k) return false;

    // Apply.
    s.adj[k] = chosen;
    uint32_t m = chosen;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      s.adj[v] |= 1u << k;
      --s.rdeg[v];
    }
    s.rdeg[k] = static_cast<int8_t>(rk);
    s.k = k + 1;

    bool ok = feasible_after(s) && !transposition_dominated(s);
    if (ok) descend(s);

    // Undo.
    s.k = k;
    s.rdeg[k] = static_cast<int8_t>(c_.d[k]);
    m = chosen;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      s.adj[v] &= ~(1u << k);
      ++s.rdeg[v];
    }
    s.adj[k] = 0;
    return ok;
  }

  bool feasible_after(const GenState& s) const {
    const int k = s.k;  // vertices 0..k-1 placed
    int future = c_.n - k;
    long owed = 0;
    for (int v = 0; v < k; ++v) {
      if (s.rdeg[v] < 0) return false;
      if (s.rdeg[v] > future) return false;
      owed += s.rdeg[v];
    }
    long fcap = c_.fsum[k];
    if (owed > fcap) return false;
    long internal = fcap - owed;
    if (internal % 2) return false;
    internal /= 2;
    if (internal > static_cast<long>(future) * (future - 1) / 2) return false;
    return true;
  }

  // If swapping two adjacent same-degree vertices (both placed) yields a
  // strictly larger decided prefix, no completion of this state is the
  // maximal labeling.
  bool transposition_dominated(const GenState& s) const {
    const int k = s.k;  // placed: 0..k-1
    for (int i = 0; i + 1 < k; ++i) {
      if (c_.block[i] != c_.block[i + 1]) continue;
      uint32_t below = (1u << i) - 1u;
      uint32_t a = s.adj[i] & below, b = s.adj[i + 1] & below;
      if (a != b) {
        if (b >> std::countr_zero(a ^ b) & 1u) return true;
        continue;
      }
      uint32_t hi = ((1u << k) - 1u) & ~((1u << (i + 2)) - 1u);
      uint32_t x = s.adj[i] & hi, y = s.adj[i + 1] & hi;
      if (x != y && (y >> std::countr_zero(x ^ y) & 1u)) return true;
    }
    return false;
  }

  void finish(GenState& s) {
    if (c_.connected && !connected_enough(c_, s.adj)) return;
    if (!is_max_code(c_, s.adj)) return;
    SimpleGraph g = SimpleGraph::empty(c_.n);
    for (int v = 0; v < c_.n; ++v) {
      uint32_t later = s.adj[v] & ~((2u << v) - 1u);
      while (later) {
        int u = std::countr_zero(later);
        later &= later - 1;
        g.add_edge(v, u);
      }
    }
    ++emitted;
    sink_(g);
  }

  const SeqContext& c_;
  const std::function<void(const SimpleGraph&)>& sink_;
  std::atomic<uint64_t>& nodes_;
  uint64_t node_budget_;
  std::atomic<bool>& truncated_;
  int split_depth_ = -1;
  std::vector<GenState>* split_out_ = nullptr;
};

}  // namespace

EnumerationStats enumerate_regime(
    const Regime& r, int jobs,
    const std::function<void(const SimpleGraph&)>& sink,
    uint64_t node_budget) {
  EnumerationStats stats;
  auto sequences = feasible_degree_sequences(r);
  std::atomic<uint64_t> nodes{0};
  std::atomic<bool> truncated{false};
  std::atomic<uint64_t> emitted{0};

  std::vector<SeqContext> contexts;
  contexts.reserve(sequences.size());
  for (auto& seq : sequences) contexts.emplace_back(std::move(seq), r);

  // Work items: subtree roots at a shallow split depth, so threads share
  // the load of uneven sequences.
  struct Item {
    int ctx;
    GenState state;
  };
  std::vector<Item> items;
  for (size_t ci = 0; ci < contexts.size(); ++ci) {
    const SeqContext& c = contexts[ci];
    int depth = std::min(c.n, jobs > 1 ? 5 : 0);
    GenState root;
    root.init(c);
    if (depth == 0) {
      items.push_back({static_cast<int>(ci), root});
      continue;
    }
    std::vector<GenState> collected;
    SequenceSearch splitter(c, sink, nodes, 0, truncated);
    splitter.run(root, depth, &collected);
    emitted += splitter.emitted;  // graphs completed above the split depth
    for (auto& st : collected) items.push_back({static_cast<int>(ci), st});
  }

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= items.size()) break;
      const SeqContext& c = contexts[items[i].ctx];
      SequenceSearch search(c, sink, nodes, node_budget, truncated);
      GenState st = items[i].state;
      search.run(st);
      emitted += search.emitted;
    }
  };
  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  stats.emitted = emitted.load();
  stats.search_nodes = nodes.load();
  stats.truncated = truncated.load();
  return stats;
}

std::vector<SimpleGraph> enumerate_sorted(const Regime& r, int jobs) {
  std::vector<std::pair<CanonicalForm, SimpleGraph>> collected;
  std::mutex mu;
  enumerate_regime(r, jobs, [&](const SimpleGraph& g) {
    CanonicalForm f = canonicalize(g);
    std::lock_guard<std::mutex> lock(mu);
    collected.emplace_back(std::move(f), g);
  });
  std::sort(collected.begin(), collected.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SimpleGraph> out;
  out.reserve(collected.size());
  for (auto& [f, g] : collected) out.push_back(g);
  return out;
}

std::set<CanonicalForm> brute_force_all(
    int order, int edge_count,
    const std::function<bool(const SimpleGraph&)>& predicate) {
  if (order < 0 || order > 7)
    throw GraphError(Err::OracleTooLarge,
                     "brute_force_all: full sweep capped at order 7");
  int npairs = order * (order - 1) / 2;
  std::vector<Edge> pairs;
  for (int c = 1; c < order; ++c)
    for (int rrow = 0; rrow < c; ++rrow) pairs.emplace_back(rrow, c);
  std::set<CanonicalForm> out;
  for (uint32_t mask = 0; mask < (1u << npairs); ++mask) {
    if (std::popcount(mask) != edge_count) continue;
    SimpleGraph g = SimpleGraph::empty(order);
    for (int i = 0; i < npairs; ++i)
      if (mask >> i & 1u) g.add_edge(pairs[i].first, pairs[i].second);
    if (!predicate(g)) continue;
    out.insert(canonicalize(g));
  }
  return out;
}

}  // namespace ikg
