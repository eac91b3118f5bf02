// Copyright 2026 The dpcolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dpcolor/construction.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/gadget.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/hall.hpp"
#include "dpcolor/io.hpp"
#include "dpcolor/potential.hpp"
#include "dpcolor/solver.hpp"
#include "grid.hpp"
#include "json.hpp"

namespace dpcolor::tools {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<int> i;
  std::optional<int> j;
  std::optional<int> m;
  std::string graph;
  std::string multigraph;
  std::string signing;
  std::string phi;
  std::string capacities;
  std::string bounds;
  std::string cache;
  std::string out_dir;
  std::string set;
  std::string grid;
  bool min = false;
  int workers = 1;
  int limit = kDefaultEnumerationLimit;
};

int require(const std::optional<int>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing ") + flag);
  return *value;
}

CapacityMap resolve_capacities(const io::GraphFile& gf, const Options& o) {
  const int n = gf.graph.num_vertices();
  if (!o.capacities.empty()) {
    CapacityMap cap = io::parse_capacities(io::read_file(o.capacities));
    if (cap.size() != n) {
      throw UsageError("capacity file has " + std::to_string(cap.size()) +
                       " entries for " + std::to_string(n) + " vertices");
    }
    return cap;
  }
  if (gf.capacities) return *gf.capacities;
  const std::optional<int> i = o.i ? o.i : gf.i;
  const std::optional<int> j = o.j ? o.j : gf.j;
  if (!i || !j) {
    throw UsageError("no capacities: pass --capacities, or --i and --j");
  }
  return CapacityMap::uniform(n, *i, *j);
}

Signing load_signing(const std::string& path, const SimpleGraph& g) {
  Signing s = io::parse_signing(io::read_file(path));
  if (s.size() != g.num_edges()) {
    throw UsageError("signing has " + std::to_string(s.size()) + " entries for " +
                     std::to_string(g.num_edges()) + " edges");
  }
  return s;
}

std::string witness_line(const Signing& s) {
  std::string json = io::signing_to_json(s);
  json.pop_back();  // trailing newline
  return json;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Construction c = build_gm(require(o.i, "--i"), require(o.j, "--j"),
                                  require(o.m, "--m"));
  const Signing bad = build_bad_cover(c);
  const DensityBound bound = density_bound(c.spec.i, c.spec.j, c.graph.num_vertices());
  const std::string graph_json = io::graph_to_json(c.graph, &c.capacities);
  const std::string signing_json = io::signing_to_json(bad);
  const std::string spec_json = io::spec_to_json(c.spec);

  if (o.out_dir.empty()) {
    Json doc;
    doc["graph"] = Json::parse(graph_json);
    doc["signing"] = Json::parse(signing_json);
    doc["spec"] = Json::parse(spec_json);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  const fs::path dir = o.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create " + dir.string() + ": " + ec.message());
  const std::vector<std::pair<fs::path, std::string>> files = {
      {dir / "graph.json", graph_json},
      {dir / "signing.json", signing_json},
      {dir / "spec.json", spec_json},
      {dir / "graph.dot", io::graph_to_dot(c.graph, &c.spec)},
      {dir / "cover.dot", io::cover_to_dot(c.graph, bad)},
  };
  io::write_files(files);
  out << "n: " << c.graph.num_vertices() << "\n"
      << "edges: " << c.graph.num_edges() << "\n"
      << "density_bound: " << to_string(bound.value) << "\n";
  for (const auto& w : bound.warnings) out << "warning: " << w << "\n";
  for (const auto& [path, content] : files) out << "wrote: " << path.string() << "\n";
  return kExitOk;
}

int cmd_check_coloring(const Options& o, std::ostream& out) {
  const io::GraphFile gf = io::parse_graph(io::read_file(o.graph));
  const CapacityMap cap = resolve_capacities(gf, o);
  const Signing s = load_signing(o.signing, gf.graph);
  const HMap phi = io::parse_hmap(io::read_file(o.phi));
  if (phi.size() != gf.graph.num_vertices()) {
    throw UsageError("H-map has " + std::to_string(phi.size()) + " entries for " +
                     std::to_string(gf.graph.num_vertices()) + " vertices");
  }
  const std::optional<Vertex> bad = first_violation(gf.graph, cap, s, phi);
  if (!bad) {
    out << "valid\n";
    return kExitOk;
  }
  const std::vector<int> degrees = phi_degrees(gf.graph, s, phi);
  out << "invalid: vertex " << *bad << " has degree " << degrees[*bad]
      << " and capacity " << capacity_of(cap.at(*bad), phi[*bad]) << "\n";
  return kExitNegative;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const io::GraphFile gf = io::parse_graph(io::read_file(o.graph));
  const CapacityMap cap = resolve_capacities(gf, o);
  const Signing s = load_signing(o.signing, gf.graph);
  const std::optional<HMap> phi = find_coloring(gf.graph, cap, s);
  if (!phi) {
    out << "coloring: none\n";
    return kExitNegative;
  }
  out << "coloring: " << io::hmap_to_json(*phi);
  return kExitOk;
}

int cmd_check_colorable(const Options& o, std::ostream& out) {
  const io::GraphFile gf = io::parse_graph(io::read_file(o.graph));
  const CapacityMap cap = resolve_capacities(gf, o);
  const ColorabilityVerdict v =
      is_colorable_all_covers(gf.graph, cap, {o.limit, o.workers});
  out << "colorable: " << (v.colorable ? "true" : "false") << "\n";
  if (v.witness) out << "witness: " << witness_line(*v.witness) << "\n";
  return v.colorable ? kExitOk : kExitNegative;
}

TrichotomyCertificate obtain_certificate(int i, int j, const Options& o) {
  if (!o.cache.empty() && fs::exists(o.cache)) {
    const io::CacheEntry e = io::parse_cache(io::read_file(o.cache));
    if (e.i == i && e.j == j) {
      return certificate_from_cache(i, j, e.verified, e.case_count, e.checksum);
    }
  }
  TrichotomyReport report = verify_flag_trichotomy(i, j, o.workers);
  if (!report.certificate) {
    throw GadgetError("flag trichotomy fails for (i,j)=(" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
  return *report.certificate;
}

void print_criticality(const CriticalityReport& r, std::ostream& out) {
  out << "critical: " << (r.critical ? "true" : "false") << "\n"
      << "colorable: " << (r.colorable ? "true" : "false") << "\n";
  if (r.witness) out << "witness: " << witness_line(*r.witness) << "\n";
  if (r.colorable) return;
  int failures = 0;
  for (const EdgeVerdict& e : r.edges) failures += !e.colorable;
  out << "edges_checked: " << r.edges.size() << "\n"
      << "edges_not_colorable_after_deletion: " << failures << "\n";
  for (const EdgeVerdict& e : r.edges) {
    if (e.colorable) continue;
    out << "edge " << e.edge << " (" << e.endpoints.u << "," << e.endpoints.v
        << "): witness " << witness_line(*e.witness) << "\n";
  }
}

int cmd_check_critical(const Options& o, std::ostream& out) {
  CriticalityReport report;
  if (!o.graph.empty()) {
    const io::GraphFile gf = io::parse_graph(io::read_file(o.graph));
    report = is_critical(gf.graph, resolve_capacities(gf, o), {o.limit, o.workers});
  } else {
    const Construction c = build_gm(require(o.i, "--i"), require(o.j, "--j"),
                                    require(o.m, "--m"));
    const TrichotomyCertificate cert = obtain_certificate(c.spec.i, c.spec.j, o);
    report = check_critical_composed(c, cert, {o.workers});
  }
  print_criticality(report, out);
  return report.critical ? kExitOk : kExitNegative;
}

int cmd_verify_claims(const Options& o, std::ostream& out) {
  const int i = require(o.i, "--i");
  const int j = require(o.j, "--j");
  const TrichotomyReport r = verify_flag_trichotomy(i, j, o.workers);
  const std::string cache_path = o.cache.empty()
      ? "trichotomy_" + std::to_string(i) + "_" + std::to_string(j) + ".json"
      : o.cache;
  const io::CacheEntry entry{i, j, r.verified(), r.case_count(), r.checksum};
  const std::pair<fs::path, std::string> file{cache_path, io::cache_to_json(entry)};
  io::write_files({&file, 1});

  std::ostringstream checksum;
  checksum << std::hex << r.checksum;
  out << "i: " << i << "\n"
      << "j: " << j << "\n"
      << "intact_cases: " << r.intact_cases << "\n"
      << "deleted_cases: " << r.deleted_cases << "\n"
      << "failures: " << r.failures.size() << "\n"
      << "checksum: 0x" << checksum.str() << "\n";
  constexpr std::size_t kShown = 10;
  for (std::size_t k = 0; k < r.failures.size() && k < kShown; ++k) {
    const TrichotomyFailure& f = r.failures[k];
    out << "failure: signing " << f.signing.to_string();
    if (f.deleted_edge) out << " deleted " << *f.deleted_edge;
    out << " expected " << to_string(f.expected) << " actual " << to_string(f.actual)
        << "\n";
  }
  out << "verified: " << (r.verified() ? "true" : "false") << "\n"
      << "cache: " << cache_path << "\n";
  return r.verified() ? kExitOk : kExitNegative;
}

int cmd_potential(const Options& o, std::ostream& out) {
  const io::GraphFile gf = io::parse_graph(io::read_file(o.graph));
  const CapacityMap cap = resolve_capacities(gf, o);
  if (o.set.empty() == !o.min) throw UsageError("pass exactly one of --set and --min");
  out << "scope,set,value\n";
  if (!o.set.empty()) {
    const VertexSet set = o.set == "FULL"
        ? all_vertices(gf.graph.num_vertices())
        : vertex_set_from_hex(o.set, gf.graph.num_vertices());
    out << "given," << vertex_set_to_hex(set) << ","
        << set_potential(gf.graph, cap, set) << "\n";
    return kExitOk;
  }
  const PotentialReport r = min_potential(gf.graph, cap, {o.limit});
  out << "min_all," << vertex_set_to_hex(r.all_sets.set) << "," << r.all_sets.value
      << "\n";
  if (r.nonempty) {
    out << "min_nonempty," << vertex_set_to_hex(r.nonempty->set) << ","
        << r.nonempty->value << "\n";
  }
  return kExitOk;
}

int cmd_orient(const Options& o, std::ostream& out) {
  const AuxiliaryInstance inst =
      make_instance(io::parse_multigraph(io::read_file(o.multigraph)),
                    io::parse_bounds(io::read_file(o.bounds)));
  Json doc;
  if (const std::optional<Orientation> d = orient_with_bounds(inst)) {
    doc["orientable"] = true;
    Json arcs = Json::array();
    for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
      const Vertex head = d->head[e];
      arcs.push_back({inst.graph.edge(e).other(head), head});
    }
    doc["arcs"] = arcs;
    doc["out_degrees"] = d->out_degrees(inst.graph);
    out << doc.dump() << "\n";
    return kExitOk;
  }
  const VertexSet a = *hall_violator(inst);
  doc["orientable"] = false;
  doc["violator"] = a;
  doc["bound_sum"] = bound_sum(inst, a);
  doc["induced_edges"] = induced_edge_count(inst.graph, a);
  out << doc.dump() << "\n";
  return kExitNegative;
}

int cmd_report(const Options& o, std::ostream& out) {
  const std::vector<GridPoint> points = parse_grid(o.grid);
  for (const GridPoint& p : points) {
    if (p.i < 1 || p.j < p.i || p.m < 1) {
      throw UsageError("grid point (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                       "," + std::to_string(p.m) + ") is outside i>=1, j>=i, m>=1");
    }
  }
  bool all_on_bound = true;
  out << "i,j,m,vertices,edges,density_bound,on_bound,rho_full\n";
  for (const GridPoint& p : points) {
    const Construction c = build_gm(p.i, p.j, p.m);
    const std::int64_t n = c.graph.num_vertices();
    const std::int64_t e = c.graph.num_edges();
    const DensityBound bound = density_bound(p.i, p.j, n);
    const bool on_bound = boost::rational<std::int64_t>(e) == bound.value;
    all_on_bound = all_on_bound && on_bound;
    out << p.i << "," << p.j << "," << p.m << "," << n << "," << e << ","
        << to_string(bound.value) << "," << (on_bound ? "true" : "false") << ","
        << set_potential(c.graph, c.capacities, all_vertices(c.graph.num_vertices()))
        << "\n";
  }
  return all_on_bound ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Defective DP-coloring toolkit", "dpcolor-cli"};
  app.require_subcommand(1);
  Options o;
  o.limit = enumeration_limit_from_env();

  auto add_ijm = [&](CLI::App* sub, bool need_m) {
    sub->add_option("--i", o.i, "poor defect bound i");
    sub->add_option("--j", o.j, "rich defect bound j");
    if (need_m) sub->add_option("--m", o.m, "path length m");
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "worker threads")
        ->check(CLI::Range(1, 256));
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", o.limit,
                    "enumeration limit (default from DPCOLOR_ENUM_LIMIT, else 24)")
        ->check(CLI::Range(0, 62));
  };
  auto existing = [](CLI::Option* opt) { return opt->check(CLI::ExistingFile); };

  std::function<int(const Options&, std::ostream&)> handler;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
    sub->callback([&handler, fn] { handler = fn; });
  };

  auto* gen = app.add_subcommand("gen", "generate G_m with its bad cover");
  add_ijm(gen, true);
  gen->add_option("--out", o.out_dir, "output directory");
  bind(gen, cmd_gen);

  auto* cc = app.add_subcommand("check-coloring", "validate an H-map");
  existing(cc->add_option("--graph", o.graph)->required());
  existing(cc->add_option("--signing", o.signing)->required());
  existing(cc->add_option("--phi", o.phi)->required());
  existing(cc->add_option("--capacities", o.capacities));
  add_ijm(cc, false);
  bind(cc, cmd_check_coloring);

  auto* solve = app.add_subcommand("solve", "find a coloring for one cover");
  existing(solve->add_option("--graph", o.graph)->required());
  existing(solve->add_option("--signing", o.signing)->required());
  existing(solve->add_option("--capacities", o.capacities));
  add_ijm(solve, false);
  bind(solve, cmd_solve);

  auto* col = app.add_subcommand("check-colorable", "colorability over all covers");
  existing(col->add_option("--graph", o.graph)->required());
  existing(col->add_option("--capacities", o.capacities));
  add_ijm(col, false);
  add_limit(col);
  add_workers(col);
  bind(col, cmd_check_colorable);

  auto* crit = app.add_subcommand("check-critical",
                                  "criticality of G_m, or of --graph by enumeration");
  add_ijm(crit, true);
  existing(crit->add_option("--graph", o.graph));
  existing(crit->add_option("--capacities", o.capacities));
  crit->add_option("--cache", o.cache, "trichotomy cache file");
  add_limit(crit);
  add_workers(crit);
  bind(crit, cmd_check_critical);

  auto* claims = app.add_subcommand("verify-claims", "exhaustive flag profiles");
  add_ijm(claims, false);
  claims->add_option("--cache", o.cache, "cache file to write");
  add_workers(claims);
  bind(claims, cmd_verify_claims);

  auto* pot = app.add_subcommand("potential", "exact potentials");
  existing(pot->add_option("--graph", o.graph)->required());
  existing(pot->add_option("--capacities", o.capacities));
  add_ijm(pot, false);
  pot->add_option("--set", o.set, "vertex set as hex bitmask, or FULL");
  pot->add_flag("--min", o.min, "minimum over all vertex sets");
  add_limit(pot);
  bind(pot, cmd_potential);

  auto* orient = app.add_subcommand("orient", "orientation with out-degree bounds");
  existing(orient->add_option("--multigraph", o.multigraph)->required());
  existing(orient->add_option("--bounds", o.bounds)->required());
  bind(orient, cmd_orient);

  auto* report = app.add_subcommand("report", "counts against the density bound");
  report->add_option("--grid", o.grid, "e.g. i=3..5,j=2i+1..2i+3,m=1..4")->required();
  bind(report, cmd_report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitUsage;
  try {
    code = handler(o, buffer);
  } catch (const EnumerationLimitError& e) {
    err << "limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace dpcolor::tools
