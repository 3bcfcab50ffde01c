#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ikg/canonical.hpp"
#include "ikg/graph.hpp"

namespace ikg {

enum class Move { TriangleY, YTriangle };

struct MoveSet {
  bool triangle_y = false;
  bool y_triangle = false;

  static MoveSet ty() { return {true, false}; }
  static MoveSet yt() { return {false, true}; }
  static MoveSet both() { return {true, true}; }
};

/// Replace the edges of triangle t by a new degree-3 vertex joined to its
/// corners. Order +1, edge count unchanged.
SimpleGraph triangle_y(const SimpleGraph& g, std::array<int, 3> t);

/// Inverse move: delete degree-3 vertex v and join its neighbors pairwise.
/// Refused (WouldCreateParallel) unless the neighborhood is independent,
/// so the result is always simple with the same edge count.
SimpleGraph y_triangle(const SimpleGraph& g, int v);

bool can_y_triangle(const SimpleGraph& g, int v);

/// All triangles as sorted triples, lexicographic.
std::vector<std::array<int, 3>> triangles(const SimpleGraph& g);

struct MoveStep {
  Move kind;
  // Vertices in the parent representative's labeling: the triangle for
  // TriangleY, {v,-1,-1} for YTriangle.
  std::array<int, 3> verts;
  CanonicalForm parent;
};

struct FamilyMember {
  SimpleGraph graph;  // canonical representative
  std::optional<MoveStep> discovered_by;  // empty for the seed
};

/// Closure of a seed under the selected moves, keyed by canonical form.
/// BFS in canonical-form order, so member set and provenance are
/// schedule-independent.
struct FamilyClosure {
  CanonicalForm seed;
  std::map<CanonicalForm, FamilyMember> members;
  bool truncated = false;

  bool contains(const CanonicalForm& f) const { return members.count(f) > 0; }
  size_t size() const { return members.size(); }

  /// Move sequence from the seed to a member (empty for the seed).
  std::vector<MoveStep> provenance(const CanonicalForm& f) const;
};

FamilyClosure family_closure(const SimpleGraph& seed, MoveSet moves,
                             size_t member_budget = 100000);

std::vector<CanonicalForm> triangle_free_members(const FamilyClosure& f);

}  // namespace ikg
