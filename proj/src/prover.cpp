#include "ikg/prover.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <mutex>
#include <ostream>
#include <sstream>

#include "ikg/catalog.hpp"
#include "ikg/graph6.hpp"
#include "ikg/planarity.hpp"
#include "ikg/reduction.hpp"

namespace ikg {
namespace {

// A piece hanging off a 2-cut is certifiably not intrinsically knotted if
// it is planar or has at most 20 edges (IK graphs need at least 21).
bool non_ik_piece(int edges, bool planar) { return planar || edges <= 20; }

std::vector<uint32_t> components_without(const SimpleGraph& g, int u, int v) {
  uint32_t all = g.order() >= 32 ? ~0u : (1u << g.order()) - 1u;
  uint32_t left = all & ~((1u << u) | (1u << v));
  std::vector<uint32_t> comps;
  while (left) {
    int s = std::countr_zero(left);
    uint32_t comp = 1u << s, frontier = comp;
    while (frontier) {
      uint32_t next = 0;
      while (frontier) {
        int w = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.neighbors(w) & left & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    left &= ~comp;
    comps.push_back(comp);
  }
  return comps;
}

std::optional<Certificate> two_cut_certificate(const SimpleGraph& g) {
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      auto comps = components_without(g, u, v);
      if (comps.size() < 2) continue;
      Certificate c;
      c.kind = CertKind::NotIKTwoCut;
      c.pair = {u, v};
      bool all_ok = true;
      for (uint32_t comp : comps) {
        SimpleGraph side =
            induced_subgraph(g, comp | (1u << u) | (1u << v));
        CutSide cs{comp | (1u << u) | (1u << v), side.edge_count(),
                   is_planar(side)};
        if (!non_ik_piece(cs.edge_count, cs.planar)) all_ok = false;
        c.sides.push_back(cs);
      }
      if (all_ok) return c;
    }
  return std::nullopt;
}

}  // namespace

const char* to_string(CertKind k) {
  switch (k) {
    case CertKind::NotIKPlanarReduction: return "NotIKPlanarReduction";
    case CertKind::NotIKTwoCut: return "NotIKTwoCut";
    case CertKind::IKByContraction: return "IKByContraction";
    case CertKind::Survivor: return "Survivor";
  }
  return "?";
}

Certificate eliminate(const SimpleGraph& g, RuleSet rules) {
  int n = g.order();
  if (rules.planar_reduction) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (is_planar(reduce_pair(g, u, v))) {
          Certificate c;
          c.kind = CertKind::NotIKPlanarReduction;
          c.pair = {u, v};
          return c;
        }
      }
  }
  if (rules.two_cut) {
    if (auto c = two_cut_certificate(g)) return *c;
  }
  Certificate c;
  c.kind = CertKind::Survivor;
  return c;
}

std::optional<Certificate> positive_certificate(
    const SimpleGraph& g, const std::vector<FamilyRef>& families) {
  for (auto e : g.edges()) {
    SimpleGraph h = contract_edge(g, e);
    CanonicalForm f = canonicalize(h);
    for (const auto& fam : families) {
      if (fam.family->contains(f)) {
        Certificate c;
        c.kind = CertKind::IKByContraction;
        c.contraction = e;
        c.family = fam.name;
        c.target_order = h.order();
        return c;
      }
    }
  }
  return std::nullopt;
}

bool replay_certificate(const SimpleGraph& g, const Certificate& c,
                        const std::vector<FamilyRef>& families) {
  switch (c.kind) {
    case CertKind::NotIKPlanarReduction:
      return is_planar(reduce_pair(g, c.pair.first, c.pair.second));
    case CertKind::NotIKTwoCut: {
      auto comps = components_without(g, c.pair.first, c.pair.second);
      if (comps.size() < 2) return false;
      for (uint32_t comp : comps) {
        SimpleGraph side = induced_subgraph(
            g, comp | (1u << c.pair.first) | (1u << c.pair.second));
        if (!non_ik_piece(side.edge_count(), is_planar(side))) return false;
      }
      return true;
    }
    case CertKind::IKByContraction: {
      if (!g.has_edge(c.contraction.first, c.contraction.second)) return false;
      SimpleGraph h = contract_edge(g, c.contraction);
      if (h.order() != c.target_order) return false;
      CanonicalForm f = canonicalize(h);
      for (const auto& fam : families)
        if (fam.name == c.family) return fam.family->contains(f);
      return false;
    }
    case CertKind::Survivor:
      return true;
  }
  return false;
}

RegimeRun run_regime(const Regime& regime, RuleSet rules, int jobs,
                     std::ostream* cert_stream, std::ostream* progress) {
  RegimeRun run;
  std::mutex mu;
  uint64_t last_report = 0;

  auto stats = enumerate_regime(regime, jobs, [&](const SimpleGraph& g) {
    Certificate cert = eliminate(g, rules);
    std::optional<std::pair<CanonicalForm, SimpleGraph>> surv;
    if (cert.kind == CertKind::Survivor)
      surv = {canonicalize(g), canonical_graph(g)};

    std::string line;
    if (cert_stream) {
      std::ostringstream os;
      os << "{\"graph6\":\"" << graph6_encode(g) << "\",\"certificate\":\""
         << to_string(cert.kind) << "\"";
      if (cert.kind == CertKind::NotIKPlanarReduction ||
          cert.kind == CertKind::NotIKTwoCut)
        os << ",\"pair\":[" << cert.pair.first << "," << cert.pair.second
           << "]";
      os << "}\n";
      line = os.str();
    }

    std::lock_guard<std::mutex> lock(mu);
    ++run.candidates;
    switch (cert.kind) {
      case CertKind::NotIKPlanarReduction: ++run.planar_reduced; break;
      case CertKind::NotIKTwoCut: ++run.two_cut; break;
      default: break;
    }
    if (surv) {
      SurvivorRecord rec;
      rec.graph = surv->second;
      rec.form = surv->first;
      rec.degree_sequence = degree_sequence(surv->second);
      run.survivors.push_back(std::move(rec));
    }
    if (cert_stream) *cert_stream << line;
    if (progress && run.candidates >= last_report + 100000) {
      last_report = run.candidates;
      *progress << "  ..." << run.candidates << " candidates, "
                << run.survivors.size() << " survivors\n";
    }
  });

  run.truncated = stats.truncated;
  std::sort(run.survivors.begin(), run.survivors.end(),
            [](const SurvivorRecord& a, const SurvivorRecord& b) {
              return a.form < b.form;
            });
  return run;
}

TheoremReport verify_theorem(int jobs, RuleSet rules, std::ostream* progress,
                             std::ostream* cert_stream) {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport rep;
  auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };
  auto expect = [&](bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  };

  if (progress) *progress << "building families...\n";
  FamilyClosure k7 = family_closure(build("K7").graph, MoveSet::ty());
  FamilyClosure k3311 =
      family_closure(build("K3311").graph, MoveSet::both());
  FamilyClosure e9e =
      family_closure(build("cousin110").graph, MoveSet::both());
  rep.k7_family = k7.size();
  rep.k3311_family = k3311.size();
  rep.e9e_family = e9e.size();
  rep.k3311_triangle_free = triangle_free_members(k3311).size();
  rep.e9e_triangle_free = triangle_free_members(e9e).size();

  expect(rep.k7_family == 14,
         "K7 family: expected 14 members, got " +
             std::to_string(rep.k7_family));
  expect(rep.k3311_family == 58,
         "K3311 family: expected 58 members, got " +
             std::to_string(rep.k3311_family));
  expect(rep.e9e_family == 110,
         "E9+e family: expected 110 members, got " +
             std::to_string(rep.e9e_family));
  expect(rep.k3311_triangle_free == 4,
         "K3311 family: expected 4 triangle-free members, got " +
             std::to_string(rep.k3311_triangle_free));
  expect(rep.e9e_triangle_free == 10,
         "E9+e family: expected 10 triangle-free members, got " +
             std::to_string(rep.e9e_triangle_free));

  CanonicalForm m11_form = canonicalize(build("M11").graph);
  CanonicalForm c110_form = canonicalize(build("cousin110").graph);
  expect(!k3311.contains(m11_form), "M11 unexpectedly in the K3311 family");
  expect(!e9e.contains(m11_form), "M11 unexpectedly in the E9+e family");
  expect(e9e.contains(c110_form), "cousin110 not in its own family closure");

  std::vector<FamilyRef> fams{{"K7", &k7}, {"K3311", &k3311}, {"E9e", &e9e}};

  // Regime A: max degree >= 6 -> everything must be eliminated.
  if (progress) *progress << "regime A (max degree >= 6)...\n";
  Regime ra;
  ra.profile = DegreeProfile::MaxDegAtLeast6;
  rep.regime_a = run_regime(ra, rules, jobs, cert_stream, progress);
  expect(!rep.regime_a.truncated, "regime A enumeration truncated");
  expect(rep.regime_a.survivors.empty(),
         "regime A: expected 0 survivors, got " +
             std::to_string(rep.regime_a.survivors.size()));

  // Regime B: max degree 5 with at least two degree-5 vertices.
  if (progress) *progress << "regime B (two degree-5 vertices)...\n";
  Regime rb;
  rb.profile = DegreeProfile::MaxDeg5WithAtLeastTwoDeg5;
  rep.regime_b = run_regime(rb, rules, jobs, cert_stream, progress);
  expect(!rep.regime_b.truncated, "regime B enumeration truncated");

  auto& survivors = rep.regime_b.survivors;
  expect(survivors.size() == 3,
         "regime B: expected 3 survivors, got " +
             std::to_string(survivors.size()));

  std::sort(survivors.begin(), survivors.end(),
            [](const SurvivorRecord& a, const SurvivorRecord& b) {
              return a.graph.order() < b.graph.order();
            });
  const std::vector<std::vector<int>> want_deg{
      {5, 5, 5, 5, 5, 5, 4, 4, 3, 3},
      {5, 5, 5, 5, 4, 4, 4, 3, 3, 3, 3},
      {5, 5, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3}};
  const std::vector<int> want_order{10, 11, 12};
  const std::vector<int> want_target{9, 10, 11};
  for (size_t i = 0; i < survivors.size() && i < 3; ++i) {
    auto& s = survivors[i];
    expect(s.graph.order() == want_order[i],
           "survivor " + std::to_string(i) + ": expected order " +
               std::to_string(want_order[i]) + ", got " +
               std::to_string(s.graph.order()));
    expect(s.degree_sequence == want_deg[i],
           "survivor " + std::to_string(i) + ": unexpected degree sequence");
    s.positive = positive_certificate(s.graph, {{"K7", &k7}});
    expect(s.positive.has_value(),
           "survivor " + std::to_string(i) +
               ": no contraction into the K7 family");
    if (s.positive)
      expect(s.positive->target_order == want_target[i],
             "survivor " + std::to_string(i) + ": contraction target order " +
                 std::to_string(s.positive->target_order) + ", expected " +
                 std::to_string(want_target[i]));
  }
  if (survivors.size() == 3) {
    expect(survivors[0].form == c110_form,
           "order-10 survivor is not the catalog cousin110");
    expect(survivors[1].form == m11_form,
           "order-11 survivor is not the catalog M11");
    expect(e9e.contains(survivors[2].form),
           "order-12 survivor (cousin 94) not in the E9+e family");
  }

  rep.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rep;
}

}  // namespace ikg
