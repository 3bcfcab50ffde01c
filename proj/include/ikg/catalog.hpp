#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ikg/graph.hpp"
#include "ikg/moves.hpp"

namespace ikg {

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
  // Edge whose contraction lands in the K7 family, when known.
  std::optional<Edge> contraction_witness;
  std::optional<std::string> expected_contraction_family;
};

/// Known names: K5, K7, K33, K44, K3311, Petersen, cousin110, M11.
/// The third theorem graph (cousin 94) has no hard-coded construction; it
/// is identified operationally as the order-12 survivor of the prover.
NamedGraph build(const std::string& name);

std::vector<std::string> catalog_names();

/// True iff contracting the stored witness edge yields a member of the
/// given family with order graph.order()-1. Falls back to searching all
/// edges when the stored witness misses; the found edge is written back.
bool verify_contraction_witness(NamedGraph& n, const FamilyClosure& family);

/// First edge (lexicographic) whose contraction lands in the family, if any.
std::optional<Edge> find_contraction_into(const SimpleGraph& g,
                                          const FamilyClosure& family);

}  // namespace ikg
