#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ikg/canonical.hpp"
#include "ikg/enumeration.hpp"
#include "ikg/graph.hpp"
#include "ikg/moves.hpp"

namespace ikg {

enum class CertKind {
  NotIKPlanarReduction,
  NotIKTwoCut,
  IKByContraction,
  Survivor,
};

const char* to_string(CertKind k);

struct CutSide {
  uint32_t vertices;  // side vertex set including the cut pair
  int edge_count;
  bool planar;
};

struct Certificate {
  CertKind kind = CertKind::Survivor;
  // NotIKPlanarReduction / NotIKTwoCut witness pair.
  std::pair<int, int> pair{-1, -1};
  std::vector<CutSide> sides;  // NotIKTwoCut
  // IKByContraction witness.
  Edge contraction{-1, -1};
  std::string family;
  int target_order = -1;
};

struct RuleSet {
  bool planar_reduction = true;
  bool two_cut = true;
};

/// Try, in order: (1) every vertex pair, returning a planar-reduction
/// witness if some reduction is planar; (2) every 2-vertex cut whose
/// sides are all certifiably not intrinsically knotted (planar, or at
/// most 20 edges, below the known 21-edge minimum for IK graphs).
/// Otherwise Survivor.
Certificate eliminate(const SimpleGraph& g, RuleSet rules = {});

/// Named family closures handed to the positive-certificate search.
struct FamilyRef {
  std::string name;
  const FamilyClosure* family;
};

/// First single-edge contraction landing in any of the families.
std::optional<Certificate> positive_certificate(
    const SimpleGraph& g, const std::vector<FamilyRef>& families);

/// Re-validate a certificate from its witness data alone.
bool replay_certificate(const SimpleGraph& g, const Certificate& c,
                        const std::vector<FamilyRef>& families);

struct SurvivorRecord {
  SimpleGraph graph;  // canonical representative
  CanonicalForm form;
  std::vector<int> degree_sequence;
  std::optional<Certificate> positive;
};

struct RegimeRun {
  uint64_t candidates = 0;
  uint64_t planar_reduced = 0;
  uint64_t two_cut = 0;
  std::vector<SurvivorRecord> survivors;
  bool truncated = false;
};

/// Run enumerate -> eliminate over a regime; survivors are collected and
/// sorted by canonical form. An optional JSON-lines sink receives one
/// record per candidate.
RegimeRun run_regime(const Regime& regime, RuleSet rules, int jobs,
                     std::ostream* cert_stream = nullptr,
                     std::ostream* progress = nullptr);

struct TheoremReport {
  size_t k7_family = 0, k3311_family = 0, e9e_family = 0;
  size_t k3311_triangle_free = 0, e9e_triangle_free = 0;
  RegimeRun regime_a, regime_b;
  std::vector<std::string> failures;  // empty iff the theorem checks out
  double wall_seconds = 0;

  bool ok() const { return failures.empty(); }
};

/// Full verification: family counts, both enumeration regimes, survivor
/// identification against the catalog, and positive certificates into the
/// K7 family. Never silently passes: every divergence lands in failures.
TheoremReport verify_theorem(int jobs, RuleSet rules = {},
                             std::ostream* progress = nullptr,
                             std::ostream* cert_stream = nullptr);

}  // namespace ikg
