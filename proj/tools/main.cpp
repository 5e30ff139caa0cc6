// planarlim command-line driver.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "planarlim/circle_packing.hpp"
#include "planarlim/convergence.hpp"
#include "planarlim/generators.hpp"
#include "planarlim/io.hpp"
#include "planarlim/mass_transport.hpp"
#include "planarlim/supported.hpp"
#include "planarlim/tiling.hpp"
#include "planarlim/triangulate.hpp"
#include "planarlim/walks.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace planarlim;

namespace {

constexpr int kExitError = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNonConvergence = 3;

struct ExperimentConfig {
  std::string command;
  std::string graph;
  std::string family;
  std::string points;
  int size = 8;
  std::vector<int> sizes;
  int max_degree = 8;
  double keep = 0.5;
  int root = -1;
  std::uint64_t seed = 1;
  double delta = 0.5;
  int s = 2;
  int radius = -1;
  int horizon = 100;
  double tol = 1e-12;
  std::string mode = "exact";
  long samples = 10000;
  std::string transport = "all";
  std::vector<std::string> k;
  bool triangulate = false;
  std::string out = ".";
  int jobs = 1;

  json to_json() const {
    json j;
    j["command"] = command;
    j["graph"] = graph;
    j["family"] = family;
    j["points"] = points;
    j["size"] = size;
    j["sizes"] = sizes;
    j["max_degree"] = max_degree;
    j["keep"] = keep;
    j["root"] = root;
    j["seed"] = seed;
    j["delta"] = delta;
    j["s"] = s;
    j["radius"] = radius;
    j["horizon"] = horizon;
    j["tol"] = tol;
    j["mode"] = mode;
    j["samples"] = samples;
    j["transport"] = transport;
    j["k"] = k;
    j["triangulate"] = triangulate;
    j["out"] = out;
    j["jobs"] = jobs;
    return j;
  }
};

/// A loaded or generated input graph.
struct Input {
  std::string label;
  Graph graph;
  std::optional<PlanarMap> map;
  std::optional<int> root;
};

// Rotation from adjacency order; planar for graphs whose cycles are all faces
// of that order, which holds for trees and cycles.
PlanarMap adjacency_map(const Graph& g) {
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return PlanarMap::from_rotation(std::move(rot));
}

Input from_map(std::string label, PlanarMap m, std::optional<int> root = {}) {
  Graph g = m.graph();
  return {std::move(label), std::move(g), std::move(m), root};
}

// Families without a natural root leave it unset; `pack` then uses the vertex
// deepest inside the disk and the walk commands use vertex 0.
Input make_family(const std::string& name, int size, const ExperimentConfig& c) {
  std::mt19937_64 rng(c.seed);
  const std::string label = name + "_" + std::to_string(size);
  if (name == "grid") return from_map(label, grid_map(size), (size / 2) * size + size / 2);
  if (name == "path") {
    const Graph g = path_graph(size);
    return from_map(label, adjacency_map(g), size / 2);
  }
  if (name == "cycle") return from_map(label, adjacency_map(cycle_graph(size)), 0);
  if (name == "complete") return {label, complete_graph(size), std::nullopt, 0};
  if (name == "binary_tree") {
    const RootedGraph t = complete_binary_tree(size);
    return from_map(label, adjacency_map(t.graph), t.root);
  }
  if (name == "hex") return from_map(label, hex_patch_map(size), 0);
  if (name == "tetrahedron") return from_map(name, tetrahedron());
  if (name == "octahedron") return from_map(name, octahedron());
  if (name == "icosahedron") return from_map(name, icosahedron());
  if (name == "geodesic") return from_map(label, geodesic_sphere(size));
  if (name == "random_triangulation")
    return from_map(label, random_bounded_triangulation(size, c.max_degree, rng));
  if (name == "random_planar") return from_map(label, random_planar_map(size, c.max_degree, c.keep, rng));
  if (name == "substitution_star" || name == "substitution_comb") {
    const auto rule = name == "substitution_star" ? SubstitutionRule::star() : SubstitutionRule::comb();
    const SubstitutionTree t = substitution_tree(rule, size);
    return from_map(label, adjacency_map(t.graph), t.v0);
  }
  if (name == "substitution_triangulation") {
    const SubstitutionTree t = substitution_tree(SubstitutionRule::star(), size);
    return from_map(label, tree_to_triangulation(t.graph, icosahedron()));
  }
  if (name == "quad") return from_map(label, quad_subdivision(size).map);
  throw InvalidInput("unknown family '" + name + "'");
}

Input load_input(const ExperimentConfig& c) {
  Input in;
  if (!c.graph.empty()) {
    const GraphFile f = read_graph_file(c.graph);
    in = {fs::path(c.graph).filename().string(), f.graph, std::nullopt, f.root};
    if (f.rotation) in.map = f.map();
  } else if (!c.family.empty()) {
    in = make_family(c.family, c.size, c);
  } else {
    throw InvalidInput("give an input with --graph or --family");
  }
  if (c.root >= 0) {
    if (c.root >= in.graph.num_vertices()) throw InvalidInput("--root is out of range");
    in.root = c.root;
  }
  return in;
}

const PlanarMap& require_map(const Input& in) {
  if (!in.map) throw InvalidInput("this command needs a planar map (rotation lines or a map family)");
  return *in.map;
}

fs::path output_path(const ExperimentConfig& c, const std::string& name) {
  fs::create_directories(c.out);
  return fs::path(c.out) / name;
}

void write_config_comment(std::ostream& out, const ExperimentConfig& c) {
  out << "# config: " << c.to_json().dump() << '\n';
}

void write_json(const ExperimentConfig& c, const std::string& name, json body) {
  json doc;
  doc["config"] = c.to_json();
  for (auto& [key, value] : body.items()) doc[key] = value;
  const fs::path p = output_path(c, name);
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << doc.dump(2) << '\n';
  std::cout << "wrote " << p.string() << '\n';
}

std::ofstream open_csv(const ExperimentConfig& c, const std::string& name) {
  const fs::path p = output_path(c, name);
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  write_config_comment(out, c);
  std::cout << "wrote " << p.string() << '\n';
  return out;
}

json graph_summary(const Input& in) {
  json j;
  j["label"] = in.label;
  j["vertices"] = in.graph.num_vertices();
  j["edges"] = in.graph.num_edges();
  j["max_degree"] = max_degree(in.graph);
  j["connected"] = is_connected(in.graph);
  if (in.map) {
    j["faces"] = in.map->num_faces();
    j["euler_characteristic"] = in.map->euler_characteristic();
    j["is_triangulation"] = in.map->is_triangulation();
  }
  if (in.root) j["root"] = *in.root;
  return j;
}

// ---------------------------------------------------------------- generate

int run_generate(const ExperimentConfig& c) {
  Input in = load_input(c);
  json body;
  if (c.triangulate) {
    const FaceTriangulation t = triangulate_faces(require_map(in), c.max_degree);
    body["input"] = graph_summary(in);
    body["triangulation"] = {{"vertex_ratio", t.vertex_ratio},
                             {"degree_ratio", t.degree_ratio},
                             {"zigzag_faces", t.zigzag_faces},
                             {"cycle_faces", t.cycle_faces},
                             {"contains_input", contains_subgraph(t.map.graph(), in.graph)}};
    in = from_map(in.label + "_triangulated", t.map, in.root);
  }
  body["graph"] = graph_summary(in);
  {
    std::ofstream out = open_csv(c, "graph.txt");
    if (in.map)
      write_map(out, *in.map, in.root);
    else
      write_graph(out, in.graph, in.root);
  }
  write_json(c, "generate.json", body);
  return 0;
}

// ---------------------------------------------------------------- pack

struct PackResult {
  Packing packing;  // normalized so the root disk is the unit disk at the origin
  json summary;
};

PackResult pack_map(const PlanarMap& m, std::optional<int> root, const ExperimentConfig& c) {
  const BoundaryCondition bc = BoundaryCondition::standard(m);
  const DiskTriangulation t(m, bc);
  SolverOptions opt;
  opt.tol = c.tol;
  const RadiiSolution sol = solve_radii(t, opt);
  const Packing raw = layout(t, sol);
  const int o = root.value_or(deepest_vertex(t));
  const Packing p = normalize_to_root(raw, o);
  const PackingCheck check = check_packing(p, m.graph());
  json j;
  j["vertices"] = m.num_vertices();
  j["boundary_vertices"] = bc.outer.size();
  j["residual"] = sol.residual;
  j["sweeps"] = sol.sweeps;
  j["newton_steps"] = sol.newton_steps;
  j["wide_residual"] = sol.wide_residual;
  j["refinement_steps"] = sol.refinement_steps;
  j["root"] = o;
  j["tangency_residual"] = check.tangency_residual;
  j["overlap"] = check.overlap;
  const int d = c.radius >= 0 ? c.radius : 2;
  try {
    const RingStats rs = ring_ratio_stats(p, t, o, d);
    j["ring"] = {{"distance", d},
                 {"max_ratio", rs.max_ratio},
                 {"max_neighbor_ratio", rs.max_neighbor_ratio},
                 {"ball_size", rs.ball_size}};
  } catch (const InvalidInput& e) {
    j["ring"] = nullptr;
    j["ring_note"] = e.what();
  }
  return {p, j};
}

int run_pack(const ExperimentConfig& c) {
  const Input in = load_input(c);
  const PackResult r = pack_map(require_map(in), in.root, c);
  {
    std::ofstream out = open_csv(c, "packing.csv");
    write_packing_csv(out, r.packing);
  }
  write_json(c, "pack.json", {{"graph", graph_summary(in)}, {"packing", r.summary}});
  return 0;
}

// ---------------------------------------------------------------- supported

PointSet make_points(const ExperimentConfig& c) {
  if (c.family == "grid_points") {
    std::vector<Point> pts;
    for (int i = 0; i < c.size; ++i)
      for (int j = 0; j < c.size; ++j) pts.push_back({static_cast<double>(i), static_cast<double>(j)});
    return PointSet(pts);
  }
  if (c.family == "random_points") {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<Point> pts;
    for (int i = 0; i < c.size; ++i) pts.push_back({u(rng), u(rng)});
    return PointSet(pts);
  }
  const Input in = load_input(c);
  return PointSet(pack_map(require_map(in), in.root, c).packing.centers);
}

json supported_summary(const PointSet& pts, const ExperimentConfig& c) {
  const std::vector<int> margins = support_margins(pts, c.delta);
  const int n_supported = count_supported(pts, c.delta, c.s);
  TilingHierarchy h = sample_tiling(c.delta, c.seed);
  TilingCensus census = census_with_retry(h, pts);
  const FlowReport flow = verify_flow_bound(census, c.s);

  // Cities, and whether each supported city sits in an s-supported square.
  const auto rho = pts.isolation_radii();
  std::map<Square, int> per_square;
  long cities = 0, supported_cities = 0, violations = 0;
  for (int w = 0; w < pts.size(); ++w) {
    const auto sq = pts.size() >= 2 ? city_square(h, pts[w], rho[w], c.delta) : std::nullopt;
    if (!sq) continue;
    ++cities;
    ++per_square[*sq];
    if (margins[w] >= c.s) {
      ++supported_cities;
      if (!census.is_s_supported(*sq, c.s)) ++violations;
    }
  }
  int max_per_square = 0;
  for (const auto& [sq, n] : per_square) max_per_square = std::max(max_per_square, n);

  json j;
  j["points"] = pts.size();
  j["delta"] = c.delta;
  j["s"] = c.s;
  j["N"] = n_supported;
  j["N_s_over_points"] = static_cast<double>(n_supported) * c.s / pts.size();
  j["tiling"] = {{"k", h.k()},
                 {"seed", h.seed()},
                 {"beta", h.beta()},
                 {"finest_level", flow.finest_level},
                 {"top_level", flow.top_level},
                 {"s_supported_squares", flow.supported_squares},
                 {"bound_2C_over_s", flow.bound},
                 {"level_a_flow_exact", flow.level_sum_exact()},
                 {"telescoping_ok", flow.telescoping_ok()},
                 {"inflows_ok", flow.inflows_ok()},
                 {"bound_ok", flow.bound_ok()}};
  j["cities"] = {{"count", cities},
                 {"max_per_square", max_per_square},
                 {"packing_bound", max_cities_per_square(c.delta)},
                 {"supported_cities", supported_cities},
                 {"supported_city_square_not_s_supported", violations},
                 {"city_probability", city_probability(h.k())}};
  return j;
}

int run_supported(const ExperimentConfig& c) {
  PointSet pts = [&] {
    if (!c.points.empty()) {
      std::ifstream in(c.points);
      if (!in) throw InvalidInput("cannot open " + c.points);
      return read_points_csv(in);
    }
    return make_points(c);
  }();
  if (c.points.empty()) {
    std::ofstream out = open_csv(c, "points.csv");
    write_points_csv(out, pts);
  }
  write_json(c, "supported.json", supported_summary(pts, c));
  return 0;
}

// ---------------------------------------------------------------- walk

int run_walk(const ExperimentConfig& c) {
  const Input in = load_input(c);
  WalkMode mode = c.mode == "mc" ? WalkMode::monte_carlo(c.samples, c.seed) : WalkMode::exact();
  mode.samples = c.samples;
  mode.seed = c.seed;
  mode.jobs = c.jobs;
  const PhiCurve curve = phi_curve(in.graph, c.horizon, mode);
  {
    std::ofstream out = open_csv(c, "phi.csv");
    out << "n,phi,stderr\n";
    for (int t = 0; t <= c.horizon; ++t)
      out << t << ',' << format_double(curve.at(t)) << ',' << format_double(curve.err(t)) << '\n';
  }
  const int o = in.root.value_or(0);
  const ReturnProfile ret = return_profile(in.graph, o, c.horizon);
  {
    std::ofstream out = open_csv(c, "return.csv");
    out << "n,p\n";
    for (int t = 0; t <= c.horizon; ++t) out << t << ',' << format_double(ret.p[t]) << '\n';
  }
  json body;
  body["graph"] = graph_summary(in);
  body["phi"] = {{"horizon", c.horizon},
                 {"value", curve.at(c.horizon)},
                 {"stderr", curve.err(c.horizon)},
                 {"exact", curve.exact},
                 {"starts", curve.starts},
                 {"samples", curve.samples}};
  body["return"] = {{"root", o}, {"p_horizon", ret.p.back()}, {"max_mass_error", ret.max_mass_error}};
  if (c.radius > 0) {
    const GrowthProfile gp = growth_profile(in.graph, o, c.radius);
    std::ofstream out = open_csv(c, "growth.csv");
    out << "r,ball_size\n";
    for (int r = 0; r <= c.radius; ++r) out << r << ',' << gp.ball_size[r] << '\n';
    body["growth"] = {{"root", o}, {"r_max", c.radius}, {"fit_radii", gp.fit_radii}, {"alpha", gp.alpha}};
  }
  write_json(c, "walk.json", body);
  return 0;
}

// ---------------------------------------------------------------- census

json census_json(const BallDistribution& d) {
  json entries = json::array();
  for (const auto& [code, count] : d.counts)
    entries.push_back({{"code", code.hex()}, {"count", count}, {"mass", to_fraction(d.mass(code))}});
  return entries;
}

int run_census(const ExperimentConfig& c) {
  const int r = c.radius >= 0 ? c.radius : 1;
  json body;
  if (!c.sizes.empty()) {
    if (c.family.empty()) throw InvalidInput("--sizes needs --family");
    std::vector<Graph> seq;
    json labels = json::array();
    for (int n : c.sizes) {
      Input in = make_family(c.family, n, c);
      labels.push_back(in.label);
      seq.push_back(std::move(in.graph));
    }
    std::vector<int> radii;
    for (int i = 1; i <= r; ++i) radii.push_back(i);
    json rows = json::array();
    for (const auto& row : convergence_diagnostic(seq, radii, c.jobs)) {
      json tv = json::array();
      for (const auto& x : row.tv) tv.push_back(to_fraction(x));
      rows.push_back({{"radius", row.radius}, {"tv", tv}, {"tail_nonincreasing", row.tail_nonincreasing}});
    }
    body["sequence"] = labels;
    body["convergence"] = rows;
    body["radius"] = r;
    body["entries"] = census_json(ball_distribution(seq.back(), r, c.jobs));
  } else {
    const Input in = load_input(c);
    const BallDistribution d = ball_distribution(in.graph, r, c.jobs);
    body["graph"] = graph_summary(in);
    body["radius"] = r;
    body["distinct_balls"] = d.counts.size();
    body["entries"] = census_json(d);
    if (r >= 1) body["wheel6_mass"] = to_fraction(pushforward(d, 1).mass(wheel_code(6)));
    if (in.map && in.map->is_triangulation() && max_degree(in.graph) <= 6)
      body["degree_deficiency"] = degree_deficiency_census(*in.map);
  }
  write_json(c, "census.json", body);
  return 0;
}

// ---------------------------------------------------------------- imtp

std::vector<Input> imtp_graphs(const ExperimentConfig& c) {
  std::vector<Input> out;
  if (!c.graph.empty()) {
    out.push_back(load_input(c));
  } else if (!c.family.empty()) {
    if (c.sizes.empty()) {
      out.push_back(make_family(c.family, c.size, c));
    } else {
      for (int n : c.sizes) out.push_back(make_family(c.family, n, c));
    }
  } else {
    // Default corpus: small members of several families.
    for (int n : {3, 5}) out.push_back({"path_" + std::to_string(n), path_graph(n), {}, {}});
    out.push_back({"cycle_6", cycle_graph(6), {}, {}});
    out.push_back({"complete_4", complete_graph(4), {}, {}});
    out.push_back({"grid_3", grid(3), {}, {}});
    out.push_back({"binary_tree_3", complete_binary_tree(3).graph, {}, {}});
    out.push_back({"hex_2", hex_patch(2), {}, {}});
    out.push_back({"octahedron", octahedron().graph(), {}, {}});
  }
  return out;
}

json result_json(const std::string& name, const ImtpResult& r) {
  return {{"transport", name}, {"lhs", to_fraction(r.lhs)}, {"rhs", to_fraction(r.rhs)}, {"equal", r.equal()}};
}

int run_imtp(const ExperimentConfig& c) {
  const std::vector<Input> inputs = imtp_graphs(c);
  std::vector<TransportFunction> fs_list;
  if (c.transport == "all") {
    fs_list = transport::builtins();
  } else {
    const auto f = transport::by_name(c.transport);
    if (!f) throw InvalidInput("unknown transport '" + c.transport + "'");
    fs_list.push_back(*f);
  }
  std::vector<Graph> graphs;
  for (const auto& in : inputs) graphs.push_back(in.graph);
  const bool biased = c.root >= 0;
  if (biased && graphs.size() != 1) throw InvalidInput("--root applies to a single graph");
  const FiniteRootedMeasure mu =
      biased ? FiniteRootedMeasure::point_root(graphs[0], c.root) : FiniteRootedMeasure::unbiased(graphs);

  json body;
  body["measure"] = biased ? "point_root" : "unbiased";
  json per_graph = json::array();
  for (const auto& in : inputs) {
    const FiniteRootedMeasure one =
        biased ? FiniteRootedMeasure::point_root(in.graph, c.root) : FiniteRootedMeasure::unbiased({in.graph});
    json results = json::array();
    for (const auto& f : fs_list) results.push_back(result_json(f.name, imtp_check(one, f)));
    per_graph.push_back({{"label", in.label}, {"vertices", in.graph.num_vertices()}, {"results", results}});
  }
  body["graphs"] = per_graph;
  json overall = json::array();
  bool all_equal = true;
  for (const auto& f : fs_list) {
    const ImtpResult r = imtp_check(mu, f);
    all_equal = all_equal && r.equal();
    overall.push_back(result_json(f.name, r));
  }
  body["overall"] = overall;
  body["all_equal"] = all_equal;
  if (!c.k.empty() && !biased) {
    std::vector<Rational> ks;
    for (const auto& text : c.k) ks.push_back(parse_fraction(text));
    std::vector<FiniteRootedMeasure> seq;
    for (const auto& g : graphs) seq.push_back(FiniteRootedMeasure::unbiased({g}));
    json trunc = json::array();
    for (const auto& f : fs_list) {
      const ImtpLimitReport rep = imtp_limit_consistency(seq, f, ks);
      json rows = json::array();
      for (const auto& row : rep.rows)
        rows.push_back({{"graph", inputs[row.index].label},
                        {"k", to_fraction(row.k)},
                        {"lhs", to_fraction(row.result.lhs)},
                        {"rhs", to_fraction(row.result.rhs)}});
      trunc.push_back({{"transport", f.name},
                       {"all_equal", rep.all_equal},
                       {"monotone_in_k", rep.monotone_in_k},
                       {"rows", rows}});
    }
    body["truncation"] = trunc;
  }
  write_json(c, "imtp.json", body);
  return 0;
}

// ---------------------------------------------------------------- pipeline

int run_pipeline(const ExperimentConfig& c) {
  ExperimentConfig gen = c;
  if (gen.graph.empty() && gen.family.empty()) gen.family = "random_triangulation";
  const Input in = load_input(gen);
  const PackResult packed = pack_map(require_map(in), in.root, c);
  const PointSet pts(packed.packing.centers);
  {
    std::ofstream out = open_csv(c, "packing.csv");
    write_packing_csv(out, packed.packing);
  }
  {
    std::ofstream out = open_csv(c, "points.csv");
    write_points_csv(out, pts);
  }
  write_json(c, "pipeline.json",
             {{"graph", graph_summary(in)}, {"packing", packed.summary}, {"supported", supported_summary(pts, c)}});
  return 0;
}

// ---------------------------------------------------------------- argument handling

std::string option_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (const auto& x : v) joined += (joined.empty() ? "" : ",") + option_value(x);
    return joined;
  }
  return v.dump();
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

/// Expands `--config file.json`: every key of the JSON object that is not
/// already given on the command line becomes `--key value`.
std::vector<std::string> expand_config(std::vector<std::string> args,
                                       const std::vector<std::string>& commands) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("config is not valid JSON: " + std::string(e.what()));
  }
  if (!cfg.is_object()) throw InvalidInput("config must be a JSON object");
  const bool has_command = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return std::find(commands.begin(), commands.end(), a) != commands.end();
  });
  if (!has_command && cfg.contains("command")) args.insert(args.begin(), cfg["command"].get<std::string>());
  for (const auto& [key, value] : cfg.items()) {
    if (key == "command" || key == "config") continue;
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    const std::string flag = "--" + name;
    if (has_flag(args, flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
      continue;
    }
    if (value.is_null()) continue;
    args.push_back(flag);
    args.push_back(option_value(value));
  }
  return args;
}

void add_common(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--graph", c.graph, "input graph file (n m header, edge lines, optional root/rot lines)");
  sub->add_option("--family", c.family, "generated input family");
  sub->add_option("--size", c.size, "family size parameter");
  sub->add_option("--sizes", c.sizes, "several family sizes (census sequences, imtp corpora)")->delimiter(',');
  sub->add_option("--max-degree", c.max_degree, "degree bound M");
  sub->add_option("--keep", c.keep, "fraction of edges kept by random_planar")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--root", c.root, "root vertex");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--delta", c.delta, "support parameter delta in (0, 1)");
  sub->add_option("--s", c.s, "support threshold s >= 2");
  sub->add_option("--radius", c.radius, "ball radius, ring distance or growth r_max");
  sub->add_option("--horizon", c.horizon, "walk horizon");
  sub->add_option("--tol", c.tol, "angle-sum tolerance");
  sub->add_option("--out", c.out, "output directory");
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig c;
  CLI::App app{"Circle packings, supported points, random walks and ball censuses of planar graphs"};
  app.require_subcommand(1);
  std::map<std::string, std::function<int(const ExperimentConfig&)>> runners{
      {"generate", run_generate}, {"pack", run_pack},   {"supported", run_supported},
      {"walk", run_walk},         {"census", run_census}, {"imtp", run_imtp},
      {"pipeline", run_pipeline}};
  std::vector<std::string> names;
  for (const auto& [name, fn] : runners) names.push_back(name);

  auto* generate = app.add_subcommand("generate", "build a graph family or triangulate a planar map");
  auto* pack = app.add_subcommand("pack", "circle packing: solve, lay out, normalize, ring statistics");
  auto* supported = app.add_subcommand("supported", "count supported points and check the tiling flow bound");
  auto* walk = app.add_subcommand("walk", "non-return and return probabilities, growth exponent");
  auto* census = app.add_subcommand("census", "ball distributions and convergence diagnostics");
  auto* imtp = app.add_subcommand("imtp", "mass transport checks with exact rationals");
  auto* pipeline = app.add_subcommand("pipeline", "generate, pack, take centers, count supported points");
  for (auto* sub : {generate, pack, supported, walk, census, imtp, pipeline}) add_common(sub, c);
  generate->add_flag("--triangulate", c.triangulate, "embed the map in a triangulation");
  supported->add_option("--points", c.points, "point set CSV (x,y)");
  walk->add_option("--mode", c.mode, "exact or mc")->check(CLI::IsMember({"exact", "mc"}));
  walk->add_option("--samples", c.samples, "Monte Carlo walks or sampled starts")->check(CLI::PositiveNumber);
  imtp->add_option("--transport", c.transport, "transport function name or 'all'");
  imtp->add_option("--k", c.k, "truncation levels (fractions allowed)")->delimiter(',');

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args), names);
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  try {
    return runners.at(c.command)(c);
  } catch (const NonConvergence& e) {
    std::cerr << "did not converge: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
