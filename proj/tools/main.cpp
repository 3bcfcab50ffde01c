// Command-line front end: enumeration, elimination, family closures,
// catalog constructions, pair reductions, and the full theorem run.
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ikg/catalog.hpp"
#include "ikg/enumeration.hpp"
#include "ikg/graph6.hpp"
#include "ikg/planarity.hpp"
#include "ikg/prover.hpp"
#include "ikg/reduction.hpp"

using nlohmann::json;
using namespace ikg;

namespace {

DegreeProfile parse_profile(const std::string& s) {
  if (s == "any") return DegreeProfile::Any;
  if (s == "maxdeg6plus") return DegreeProfile::MaxDegAtLeast6;
  if (s == "two-deg5") return DegreeProfile::MaxDeg5WithAtLeastTwoDeg5;
  throw CLI::ValidationError("profile", "unknown profile " + s);
}

RuleSet parse_rules(const std::string& s) {
  RuleSet r{false, false};
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "planar-reduction") r.planar_reduction = true;
    else if (tok == "two-cut") r.two_cut = true;
    else throw CLI::ValidationError("rules", "unknown rule " + tok);
  }
  return r;
}

SimpleGraph parse_seed(const std::string& s) {
  if (s.rfind("named:", 0) == 0) return build(s.substr(6)).graph;
  if (s.rfind("g6:", 0) == 0) return graph6_decode(s.substr(3));
  return graph6_decode(s);
}

std::vector<SimpleGraph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return graph6_read_lines(buf.str());
}

void write_or_print(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << text;
  }
}

json certificate_json(const Certificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  switch (c.kind) {
    case CertKind::NotIKPlanarReduction:
      j["pair"] = {c.pair.first, c.pair.second};
      break;
    case CertKind::NotIKTwoCut: {
      j["pair"] = {c.pair.first, c.pair.second};
      json sides = json::array();
      for (const auto& s : c.sides)
        sides.push_back({{"edges", s.edge_count}, {"planar", s.planar}});
      j["sides"] = sides;
      break;
    }
    case CertKind::IKByContraction:
      j["edge"] = {c.contraction.first, c.contraction.second};
      j["family"] = c.family;
      j["target_order"] = c.target_order;
      break;
    case CertKind::Survivor:
      break;
  }
  return j;
}

json ledger_json(const ReductionLedger& led) {
  return json{{"ne", led.ne},
              {"nv3", led.nv3},
              {"v4", led.v4},
              {"vy", led.vy},
              {"predicted", led.predicted},
              {"actual", led.actual},
              {"degenerate", led.degenerate},
              {"pair", {led.pair.first, led.pair.second}}};
}

json regime_json(const RegimeRun& run) {
  json surv = json::array();
  for (const auto& s : run.survivors) {
    json j{{"graph6", s.form.bytes},
           {"order", s.graph.order()},
           {"degree_sequence", s.degree_sequence}};
    if (s.positive) j["certificate"] = certificate_json(*s.positive);
    surv.push_back(j);
  }
  return json{{"candidates", run.candidates},
              {"planar_reduced", run.planar_reduced},
              {"two_cut", run.two_cut},
              {"survivors", surv},
              {"truncated", run.truncated}};
}

int cmd_enumerate(int edges, int min_degree, bool triangle_free,
                  const std::string& profile, const std::string& out, int jobs,
                  uint64_t budget) {
  Regime r;
  r.edge_count = edges;
  r.min_degree = min_degree;
  r.triangle_free = triangle_free;
  r.profile = parse_profile(profile);
  std::vector<std::pair<CanonicalForm, SimpleGraph>> got;
  std::mutex mu;
  auto stats = enumerate_regime(r, jobs, [&](const SimpleGraph& g) {
    auto f = canonicalize(g);
    std::lock_guard<std::mutex> lock(mu);
    got.emplace_back(std::move(f), g);
  }, budget);
  std::sort(got.begin(), got.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string text;
  for (auto& [f, g] : got) {
    text += graph6_encode(g);
    text += '\n';
  }
  write_or_print(out, text);
  std::cerr << got.size() << " graphs, " << stats.search_nodes
            << " search nodes" << (stats.truncated ? " (TRUNCATED)" : "")
            << "\n";
  return stats.truncated ? 1 : 0;
}

int cmd_prove(const std::string& in, const std::string& rules_str,
              const std::string& cert_path, int jobs) {
  (void)jobs;
  RuleSet rules = parse_rules(rules_str);
  auto graphs = read_graph_file(in);
  std::ofstream cert_file;
  std::ostream* certs = nullptr;
  if (!cert_path.empty()) {
    cert_file.open(cert_path);
    certs = &cert_file;
  }
  json summary;
  summary["graphs"] = graphs.size();
  uint64_t eliminated = 0;
  json survivors = json::array();
  for (const auto& g : graphs) {
    Certificate c = eliminate(g, rules);
    if (certs) {
      json line{{"graph6", graph6_encode(g)},
                {"degree_sequence", degree_sequence(g)},
                {"canonical", canonicalize(g).bytes},
                {"certificate", certificate_json(c)}};
      *certs << line.dump() << "\n";
    }
    if (c.kind == CertKind::Survivor)
      survivors.push_back(canonicalize(g).bytes);
    else
      ++eliminated;
  }
  summary["eliminated"] = eliminated;
  summary["survivors"] = survivors;
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_theorem(int jobs, const std::string& rules_str,
                const std::string& report_path,
                const std::string& cert_path) {
  RuleSet rules = parse_rules(rules_str);
  std::ofstream cert_file;
  std::ostream* certs = nullptr;
  if (!cert_path.empty()) {
    cert_file.open(cert_path);
    certs = &cert_file;
  }
  TheoremReport rep = verify_theorem(jobs, rules, &std::cerr, certs);
  json j;
  j["families"] = {{"K7", rep.k7_family},
                   {"K3311", rep.k3311_family},
                   {"K3311_triangle_free", rep.k3311_triangle_free},
                   {"E9e", rep.e9e_family},
                   {"E9e_triangle_free", rep.e9e_triangle_free}};
  j["regime_max_degree_6_plus"] = regime_json(rep.regime_a);
  j["regime_two_degree_5"] = regime_json(rep.regime_b);
  j["failures"] = rep.failures;
  j["ok"] = rep.ok();
  j["timing"] = {{"wall_seconds", rep.wall_seconds}};
  if (report_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(report_path);
    out << j.dump(2) << "\n";
    std::cout << (rep.ok() ? "theorem verified" : "THEOREM CHECK FAILED")
              << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_family(const std::string& seed, const std::string& moves,
               const std::string& out, const std::string& provenance,
               size_t budget) {
  MoveSet ms;
  std::stringstream ss(moves);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "ty") ms.triangle_y = true;
    else if (tok == "yt") ms.y_triangle = true;
    else throw CLI::ValidationError("moves", "unknown move " + tok);
  }
  FamilyClosure fam = family_closure(parse_seed(seed), ms, budget);
  if (!out.empty()) {
    std::string text;
    for (const auto& [form, member] : fam.members) text += form.bytes + "\n";
    write_or_print(out, text);
  }
  if (!provenance.empty()) {
    json j;
    j["seed"] = fam.seed.bytes;
    j["truncated"] = fam.truncated;
    json members = json::array();
    for (const auto& [form, member] : fam.members) {
      json m{{"graph6", form.bytes},
             {"order", member.graph.order()},
             {"triangle_free", is_triangle_free(member.graph)}};
      json steps = json::array();
      for (const auto& st : fam.provenance(form)) {
        if (st.kind == Move::TriangleY)
          steps.push_back({{"move", "ty"},
                           {"triangle", {st.verts[0], st.verts[1], st.verts[2]}},
                           {"parent", st.parent.bytes}});
        else
          steps.push_back(
              {{"move", "yt"}, {"vertex", st.verts[0]}, {"parent", st.parent.bytes}});
      }
      m["steps"] = steps;
      members.push_back(m);
    }
    j["members"] = members;
    write_or_print(provenance, j.dump(2) + "\n");
  }
  std::cout << fam.size() << "\n";
  if (fam.truncated) {
    std::cerr << "closure budget exceeded; member set incomplete\n";
    return 1;
  }
  return 0;
}

int cmd_catalog(const std::string& name) {
  NamedGraph n = build(name);
  json j{{"name", n.name},
         {"graph6", graph6_encode(n.graph)},
         {"order", n.graph.order()},
         {"edges", n.graph.edge_count()},
         {"degree_sequence", degree_sequence(n.graph)},
         {"triangle_free", is_triangle_free(n.graph)}};
  if (n.contraction_witness)
    j["contraction_witness"] = {n.contraction_witness->first,
                                n.contraction_witness->second};
  if (n.expected_contraction_family)
    j["contraction_family"] = *n.expected_contraction_family;
  std::cout << graph6_encode(n.graph) << "\n" << j.dump(2) << "\n";
  return 0;
}

int cmd_reduce(const std::string& g6, const std::string& pair_str,
               bool with_ledger) {
  SimpleGraph g = graph6_decode(g6);
  int a, b;
  char comma;
  std::stringstream ss(pair_str);
  if (!(ss >> a >> comma >> b) || comma != ',')
    throw CLI::ValidationError("pair", "expected a,b");
  SimpleGraph r = reduce_pair(g, a, b);
  json j{{"graph6", graph6_encode(r)},
         {"edges", r.edge_count()},
         {"planar", is_planar(r)}};
  if (with_ledger) j["ledger"] = ledger_json(pair_ledger(g, a, b));
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangle-free 22-edge intrinsic-knottedness verifier"};
  app.require_subcommand(1);

  // enumerate
  auto* enumcmd = app.add_subcommand(
      "enumerate", "exhaustively generate a regime, one graph6 line per class");
  int edges = 22, min_degree = 3, jobs = 1;
  bool triangle_free = true;
  std::string profile = "any", out, in, rules = "planar-reduction,two-cut";
  uint64_t budget = 0;
  enumcmd->add_option("--edges", edges, "edge count")->required();
  enumcmd->add_option("--min-degree", min_degree, "minimum degree");
  enumcmd->add_flag("--triangle-free,!--no-triangle-free", triangle_free,
                    "restrict to triangle-free graphs");
  enumcmd->add_option("--profile", profile, "any|two-deg5|maxdeg6plus");
  enumcmd->add_option("--out", out, "output file (default stdout)");
  enumcmd->add_option("--jobs", jobs, "worker threads");
  enumcmd->add_option("--budget", budget,
                      "search-node budget, 0 = unlimited; exceeding it "
                      "truncates loudly");

  // prove
  auto* provecmd =
      app.add_subcommand("prove", "run elimination rules over a graph6 file");
  std::string certs;
  provecmd->add_option("--in", in, "graph6 input file")->required();
  provecmd->add_option("--rules", rules,
                       "comma list: planar-reduction,two-cut");
  provecmd->add_option("--certificates", certs, "JSON-lines output path");
  provecmd->add_option("--jobs", jobs, "worker threads");

  // theorem
  auto* theoremcmd = app.add_subcommand(
      "theorem", "full verification of the classification");
  std::string report;
  theoremcmd->add_option("--jobs", jobs, "worker threads");
  theoremcmd->add_option("--rules", rules,
                         "comma list: planar-reduction,two-cut");
  theoremcmd->add_option("--report", report, "write the JSON report here");
  theoremcmd->add_option("--certificates", certs,
                         "JSON-lines per-candidate stream");

  // family
  auto* familycmd =
      app.add_subcommand("family", "closure under triangle-Y / Y-triangle");
  std::string seed, moves = "ty,yt", provenance;
  size_t member_budget = 100000;
  familycmd->add_option("--seed", seed, "named:<name> or g6:<string>")
      ->required();
  familycmd->add_option("--moves", moves, "comma list: ty,yt");
  familycmd->add_option("--out", out, "graph6 lines for the members");
  familycmd->add_option("--provenance", provenance, "JSON sidecar path");
  familycmd->add_option("--budget", member_budget, "member budget");

  // catalog
  auto* catalogcmd =
      app.add_subcommand("catalog", "emit a named construction");
  std::string name;
  catalogcmd->add_option("name", name, "graph name")->required();

  // reduce
  auto* reducecmd =
      app.add_subcommand("reduce", "delete a pair and suppress to min degree 3");
  std::string g6, pair_str;
  bool with_ledger = false;
  reducecmd->add_option("--graph", g6, "graph6 string")->required();
  reducecmd->add_option("--pair", pair_str, "a,b")->required();
  reducecmd->add_flag("--ledger", with_ledger, "include the count-equation ledger");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumcmd->parsed())
      return cmd_enumerate(edges, min_degree, triangle_free, profile, out,
                           jobs, budget);
    if (provecmd->parsed()) return cmd_prove(in, rules, certs, jobs);
    if (theoremcmd->parsed()) return cmd_theorem(jobs, rules, report, certs);
    if (familycmd->parsed())
      return cmd_family(seed, moves, out, provenance, member_budget);
    if (catalogcmd->parsed()) return cmd_catalog(name);
    if (reducecmd->parsed()) return cmd_reduce(g6, pair_str, with_ledger);
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
