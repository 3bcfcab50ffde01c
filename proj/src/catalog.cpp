#include "ikg/catalog.hpp"

#include "ikg/canonical.hpp"

namespace ikg {
namespace {

SimpleGraph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return SimpleGraph::from_edges(n, es);
}

SimpleGraph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  std::vector<int> part_of;
  for (size_t p = 0; p < parts.size(); ++p)
    for (int i = 0; i < parts[p]; ++i) {
      part_of.push_back(static_cast<int>(p));
      ++n;
    }
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) es.emplace_back(i, j);
  return SimpleGraph::from_edges(n, es);
}

SimpleGraph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);          // outer cycle
    es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    es.emplace_back(i, 5 + i);                // spokes
  }
  return SimpleGraph::from_edges(10, es);
}

// 10 vertices: a=0 b=1 x1=2 y1=3 z1=4 z2=5 z3=6 v1=7 v2=8 v3=9.
// a,b join all of {x1,y1,z1,z2,z3}; each z_i joins {v1,v2,v3}; plus
// x1-v1, y1-v1, y1-v2. 22 edges, degrees [5,5,5,5,5,5,4,4,3,3].
SimpleGraph cousin110() {
  std::vector<Edge> es;
  for (int ab : {0, 1})
    for (int t : {2, 3, 4, 5, 6}) es.emplace_back(ab, t);
  for (int z : {4, 5, 6})
    for (int v : {7, 8, 9}) es.emplace_back(z, v);
  es.emplace_back(2, 7);
  es.emplace_back(3, 7);
  es.emplace_back(3, 8);
  return SimpleGraph::from_edges(10, es);
}

// 11 vertices: a=0 b=1 x1=2 y1=3 y2=4 z1=5 z2=6 v1=7 v2=8 v3=9 v4=10.
// a,b join all of {x1,y1,y2,z1,z2}; z1,z2 join {v1,v2,v3}; plus x1-v1,
// v2-y1, v3-y2, v4-y1, v4-y2, v4-v1. 22 edges, four vertices of degree 5.
SimpleGraph m11() {
  std::vector<Edge> es;
  for (int ab : {0, 1})
    for (int t : {2, 3, 4, 5, 6}) es.emplace_back(ab, t);
  for (int z : {5, 6})
    for (int v : {7, 8, 9}) es.emplace_back(z, v);
  es.emplace_back(2, 7);
  es.emplace_back(8, 3);
  es.emplace_back(9, 4);
  es.emplace_back(10, 3);
  es.emplace_back(10, 4);
  es.emplace_back(10, 7);
  return SimpleGraph::from_edges(11, es);
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"K5", "K7", "K33", "K44", "K3311", "Petersen", "cousin110", "M11"};
}

NamedGraph build(const std::string& name) {
  if (name == "K5") return {name, complete(5), std::nullopt, std::nullopt};
  if (name == "K7") return {name, complete(7), std::nullopt, std::nullopt};
  if (name == "K33")
    return {name, complete_multipartite({3, 3}), std::nullopt, std::nullopt};
  if (name == "K44")
    return {name, complete_multipartite({4, 4}), std::nullopt, std::nullopt};
  if (name == "K3311")
    return {name, complete_multipartite({3, 3, 1, 1}), std::nullopt,
            std::nullopt};
  if (name == "Petersen") return {name, petersen(), std::nullopt, std::nullopt};
  if (name == "cousin110")
    return {name, cousin110(), Edge{3, 8}, std::string("K7")};
  if (name == "M11") return {name, m11(), Edge{3, 8}, std::string("K7")};
  throw GraphError(Err::UnknownGraph, "catalog: unknown name " + name);
}

std::optional<Edge> find_contraction_into(const SimpleGraph& g,
                                          const FamilyClosure& family) {
  for (auto e : g.edges()) {
    if (family.contains(canonicalize(contract_edge(g, e)))) return e;
  }
  return std::nullopt;
}

bool verify_contraction_witness(NamedGraph& n, const FamilyClosure& family) {
  if (!n.contraction_witness)
    throw GraphError(Err::NoWitness, "no contraction witness stored");
  auto check = [&](Edge e) {
    SimpleGraph h = contract_edge(n.graph, e);
    return h.order() == n.graph.order() - 1 &&
           family.contains(canonicalize(h));
  };
  if (check(*n.contraction_witness)) return true;
  if (auto found = find_contraction_into(n.graph, family)) {
    n.contraction_witness = *found;
    return true;
  }
  return false;
}

}  // namespace ikg
