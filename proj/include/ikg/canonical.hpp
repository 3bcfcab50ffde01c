#pragma once

#include <string>

#include "ikg/graph.hpp"

namespace ikg {

/// Relabeling-invariant fingerprint. Two graphs have equal bytes iff they
/// are isomorphic — exact, not a hash. The bytes are the graph6 encoding
/// of the canonical representative, so every form is printable and
/// decodable back into a graph.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// The canonical representative itself (g relabeled into canonical order).
SimpleGraph canonical_graph(const SimpleGraph& g);

CanonicalForm canonicalize(const SimpleGraph& g);

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace ikg

template <>
struct std::hash<ikg::CanonicalForm> {
  size_t operator()(const ikg::CanonicalForm& f) const {
    return std::hash<std::string>()(f.bytes);
  }
};
