#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "revdiam/cactus.hpp"
#include "revdiam/cactus_solver.hpp"
#include "revdiam/distance.hpp"
#include "revdiam/edge_polytope.hpp"
#include "revdiam/error.hpp"

namespace revdiam::cli {

namespace {

const char* mode_name(CostMode m) { return m == CostMode::Weight ? "weight" : "cardinality"; }

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::Auto: return "auto";
    case Algo::Brute: return "brute";
    case Algo::Cactus: return "cactus";
    case Algo::Oracle: return "oracle";
  }
  return "auto";
}

json id_array(const ReversalSet& f) {
  json out = json::array();
  for (ArcId id : f.ids()) out.push_back(id);
  return out;
}

json volume_json(const RationalVolume& v) {
  std::ostringstream text;
  text << v.value;
  return {{"volume", text.str()},
          {"volume_num", numerator(v.value).convert_to<std::int64_t>()},
          {"volume_den", denominator(v.value).convert_to<std::int64_t>()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool uses_cactus(const Digraph& d) {
  if (d.vertex_count() < 2) return false;
  try {
    return std::holds_alternative<CycleTree>(cactus_decompose(d));
  } catch (const InvalidArgument&) {
    return false;
  }
}

// Every cycle oriented as a directed cycle, so the free-sum product applies.
std::optional<RationalVolume> cactus_fast_path(const Digraph& d) {
  if (d.vertex_count() < 2) return std::nullopt;
  try {
    const CactusDecomposition dec = cactus_decompose(d);
    if (const auto* tree = std::get_if<CycleTree>(&dec); tree && tree->real_cycle_count() > 0)
      return cactus_volume(d, *tree);
  } catch (const InvalidArgument&) {
  }
  return std::nullopt;
}

json error_report(const std::string& command, const std::string& message) {
  return {{"command", command}, {"outcome", "Error"}, {"error", message}};
}

}  // namespace

json instance_digest(const Digraph& d) {
  return {{"n", d.vertex_count()}, {"m", d.arc_count()}, {"total_weight", d.total_weight()}};
}

CommandResult cmd_solve(const Digraph& d, const SolveRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  Algo used = req.algo;
  if (used == Algo::Auto) used = uses_cactus(d) ? Algo::Cactus : Algo::Brute;

  std::optional<Solution> sol;
  switch (used) {
    case Algo::Cactus:
      sol = solve_cactus(d, req.d, req.k, req.mode);
      break;
    case Algo::Oracle:
      if (req.d < 2) throw DiameterBelowTwo();
      if (req.k < 0) throw InvalidArgument("negative reversal budget");
      sol = oracle_min_reversals(d, req.d, req.mode, req.oracle_cap);
      if (sol && sol->cost > req.k) sol.reset();
      break;
    default:
      sol = solve_k_reversals(d, {req.d, req.k, req.mode}, {req.strategy, req.threads});
      break;
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

  CommandResult res;
  res.report = {{"command", "solve"},
                {"instance", instance_digest(d)},
                {"parameters",
                 {{"d", req.d}, {"k", req.k}, {"mode", mode_name(req.mode)}, {"algo", algo_name(req.algo)},
                  {"algorithm", algo_name(used)}}},
                {"outcome", sol ? "Feasible" : "Infeasible"}};
  if (sol) {
    res.report["witness"] = id_array(sol->witness);
    res.report["achieved_diameter"] = io::distance_to_json(sol->achieved_diameter);
    res.report["cost"] = sol->cost;
  }
  res.report["wall_time_ms"] = elapsed.count();
  res.exit_code = sol ? 0 : 1;
  return res;
}

ReversalSet witness_from_json(const json& j) {
  const json* ids = &j;
  if (j.is_object()) {
    if (!j.contains("witness")) throw FormatError("witness object has no \"witness\" array");
    ids = &j.at("witness");
  }
  if (!ids->is_array()) throw FormatError("witness must be an array of arc ids");
  std::vector<ArcId> out;
  for (const json& x : *ids) {
    if (!x.is_number_integer()) throw FormatError("witness ids must be integers");
    const auto v = x.get<std::int64_t>();
    if (v < 0 || v > std::numeric_limits<ArcId>::max()) throw InvalidArgument("witness id out of range");
    out.push_back(static_cast<ArcId>(v));
  }
  return ReversalSet(std::move(out));
}

CommandResult cmd_verify(const Digraph& d, const ReversalSet& witness, std::int64_t target,
                         std::optional<std::int64_t> budget, CostMode mode) {
  if (target < 2) throw DiameterBelowTwo();
  witness.validate(d);
  const ExtendedDistance achieved = diameter(reverse_arcs(d, witness));
  const std::int64_t cost = reversal_cost(d, witness, mode);
  const bool ok = achieved.at_most(target) && (!budget || cost <= *budget);

  CommandResult res;
  res.report = {{"command", "verify"},
                {"instance", instance_digest(d)},
                {"parameters", {{"d", target}, {"mode", mode_name(mode)}}},
                {"outcome", ok ? "Feasible" : "Infeasible"},
                {"witness", id_array(witness)},
                {"achieved_diameter", io::distance_to_json(achieved)},
                {"cost", cost}};
  if (budget) res.report["parameters"]["k"] = *budget;
  res.exit_code = ok ? 0 : 1;
  return res;
}

std::vector<OutputFile> generate_ds(const DominatingSetInstance& inst, const std::string& stem) {
  const DominatingSetReduction red = dominating_set_to_kreversals(inst);
  json edges = json::array();
  for (auto [a, b] : inst.edges) edges.push_back({a, b});
  json gadgets = json::array();
  for (std::size_t i = 0; i < red.map.gadgets.size(); ++i) {
    const Gadget& g = red.map.gadgets[i];
    gadgets.push_back({{"vertex", i},   {"u1", g.u1},   {"u2", g.u2},   {"d1", g.d1},
                       {"d2", g.d2},    {"au1", g.au1}, {"au2", g.au2}, {"ad1", g.ad1},
                       {"ad2", g.ad2},  {"top_arc", g.top_arc}});
  }
  const json map = {{"kind", "ds"},
                    {"source", {{"n", inst.n}, {"edges", edges}, {"ell", inst.ell}}},
                    {"d", red.d},
                    {"k", red.k},
                    {"gadgets", gadgets}};
  return {{stem + ".json", dump(io::digraph_to_json(red.graph))},
          {stem + ".map.json", dump(map)},
          {stem + ".dot", io::to_dot(red.graph, "H")}};
}

std::vector<OutputFile> generate_partition(const PartitionInstance& inst, const std::string& stem) {
  const PartitionReduction red = partition_to_weighted_kreversals(inst);
  const json map = {{"kind", "partition"},  {"values", inst.values}, {"half_sum", red.half_sum},
                    {"d", red.d},           {"k", red.k},            {"mode", "weight"},
                    {"e_arcs", red.e_arcs}, {"f_arcs", red.f_arcs}};
  return {{stem + ".json", dump(io::digraph_to_json(red.graph))},
          {stem + ".map.json", dump(map)},
          {stem + ".dot", io::to_dot(red.graph, "P")}};
}

std::vector<OutputFile> generate_counterexample(std::int64_t i, const std::string& stem) {
  const CounterexamplePair pair = build_counterexample_pair(i);
  const json g_volume = volume_json(cactus_volume(pair.g));
  const json h_volume = volume_json(cactus_volume(pair.h));
  const json map = {{"kind", "counterexample"},
                    {"i", i},
                    {"reversed_cycle", pair.reversed_cycle},
                    {"g", {{"file", stem + "_g.json"}, {"diameter", io::distance_to_json(diameter(pair.g))},
                           {"volume", g_volume}}},
                    {"h", {{"file", stem + "_h.json"}, {"diameter", io::distance_to_json(diameter(pair.h))},
                           {"volume", h_volume}}}};
  return {{stem + "_g.json", dump(io::digraph_to_json(pair.g))},
          {stem + "_h.json", dump(io::digraph_to_json(pair.h))},
          {stem + ".map.json", dump(map)},
          {stem + "_g.dot", io::to_dot(pair.g, "G")},
          {stem + "_h.dot", io::to_dot(pair.h, "H")}};
}

json cmd_volume(const Digraph& d) {
  json out = {{"command", "volume"}, {"instance", instance_digest(d)}};
  if (const auto fast = cactus_fast_path(d)) {
    out.update(volume_json(*fast));
    out["method"] = "cactus";
    return out;
  }
  const LatticePointSet p = directed_edge_polytope(d);
  out.update(volume_json(normalized_volume(p)));
  out["dimension"] = p.affine_dimension();
  out["method"] = "ehrhart";
  return out;
}

std::string cmd_volume_sweep(const Digraph& d) {
  std::ostringstream out;
  io::write_sweep_csv(out, orientation_sweep(d));
  return out.str();
}

std::size_t oracle_cap_from_env() {
  const char* raw = std::getenv("REVDIAM_ORACLE_CAP");
  if (!raw || !*raw) return kDefaultOracleArcCap;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 0) return kDefaultOracleArcCap;
  return static_cast<std::size_t>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-Reversals toolkit: solvers, reduction generators, edge-polytope volumes", "revdiam"};
  app.require_subcommand(1);

  const std::map<std::string, CostMode> modes{{"cardinality", CostMode::Cardinality}, {"weight", CostMode::Weight}};
  const std::map<std::string, Algo> algos{
      {"auto", Algo::Auto}, {"brute", Algo::Brute}, {"cactus", Algo::Cactus}, {"oracle", Algo::Oracle}};
  const std::map<std::string, SearchStrategy> strategies{{"pruned", SearchStrategy::Pruned},
                                                         {"exhaustive", SearchStrategy::Exhaustive}};

  std::string instance_path;
  SolveRequest req;
  auto* solve = app.add_subcommand("solve", "Decide (Weighted) k-Reversals and print a JSON report");
  solve->add_option("instance", instance_path, "Instance JSON")->required();
  solve->add_option("-d,--diameter", req.d, "Target diameter (>= 2)")->required();
  solve->add_option("-k,--budget", req.k, "Reversal budget")->required();
  solve->add_option("--mode", req.mode, "cardinality|weight")->transform(CLI::CheckedTransformer(modes));
  solve->add_option("--algo", req.algo, "auto|brute|cactus|oracle")->transform(CLI::CheckedTransformer(algos));
  solve->add_option("--strategy", req.strategy, "pruned|exhaustive (brute only)")
      ->transform(CLI::CheckedTransformer(strategies));
  solve->add_option("--threads", req.threads, "Worker threads for brute (0 = hardware)");

  std::string witness_path;
  std::int64_t verify_d = 2;
  std::optional<std::int64_t> verify_k;
  CostMode verify_mode = CostMode::Cardinality;
  auto* verify = app.add_subcommand("verify", "Recompute diameter and cost of a witness");
  verify->add_option("instance", instance_path, "Instance JSON")->required();
  verify->add_option("witness", witness_path, "Witness JSON (id array or solve report)")->required();
  verify->add_option("-d,--diameter", verify_d, "Target diameter (>= 2)")->required();
  verify->add_option("-k,--budget", verify_k, "Reversal budget");
  verify->add_option("--mode", verify_mode, "cardinality|weight")->transform(CLI::CheckedTransformer(modes));

  std::string out_dir = ".";
  std::string stem;
  auto* generate = app.add_subcommand("generate", "Write a reduction or counter-example instance");
  generate->require_subcommand(1);
  generate->add_option("--out", out_dir, "Output directory");
  generate->add_option("--name", stem, "File stem");

  VertexId ds_n = 0;
  std::vector<std::string> ds_edges;
  std::int64_t ds_ell = 0;
  auto* gen_ds = generate->add_subcommand("ds", "Dominating Set gadget construction");
  gen_ds->add_option("--n", ds_n, "Vertex count")->required();
  gen_ds->add_option("--edges", ds_edges, "Edges as a-b, comma separated")->delimiter(',');
  gen_ds->add_option("--ell", ds_ell, "Dominating set size bound")->required();

  std::vector<std::int64_t> values;
  auto* gen_partition = generate->add_subcommand("partition", "Partition to weighted cactus");
  gen_partition->add_option("--values", values, "Positive integers, comma separated")->delimiter(',')->required();

  for (auto* sub : {gen_ds, gen_partition}) sub->fallthrough();
  std::int64_t family_i = 8;
  auto* gen_counter = generate->add_subcommand("counterexample", "Equal-volume cactus pair");
  gen_counter->add_option("--i", family_i, "Diameter of G (>= 8)")->required();
  gen_counter->fallthrough();

  bool sweep = false;
  auto* volume = app.add_subcommand("volume", "Normalized volume of the directed edge polytope");
  volume->add_option("instance", instance_path, "Instance JSON")->required();
  volume->add_flag("--sweep", sweep, "CSV over all 2^m orientations");

  std::string map_path;
  auto* extract = app.add_subcommand("extract", "Decode a witness through a generator sidecar");
  extract->add_option("map", map_path, "Sidecar .map.json")->required();
  extract->add_option("witness", witness_path, "Witness JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string command = "revdiam";
  for (auto* sub : app.get_subcommands()) command = sub->get_name();
  try {
    if (solve->parsed()) {
      req.oracle_cap = oracle_cap_from_env();
      const CommandResult r = cmd_solve(io::read_instance(instance_path), req);
      out << dump(r.report);
      return r.exit_code;
    }
    if (verify->parsed()) {
      const Digraph d = io::read_instance(instance_path);
      const CommandResult r = cmd_verify(d, witness_from_json(io::read_json(witness_path)), verify_d, verify_k,
                                         verify_mode);
      out << dump(r.report);
      return r.exit_code;
    }
    if (generate->parsed()) {
      std::vector<OutputFile> files;
      if (gen_ds->parsed()) {
        DominatingSetInstance inst{ds_n, {}, ds_ell};
        for (const std::string& e : ds_edges) {
          const auto dash = e.find('-');
          if (dash == std::string::npos) throw InvalidArgument("edge \"" + e + "\" is not of the form a-b");
          inst.edges.emplace_back(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
        }
        files = generate_ds(inst, stem.empty() ? "ds" : stem);
      } else if (gen_partition->parsed()) {
        files = generate_partition(PartitionInstance{values}, stem.empty() ? "partition" : stem);
      } else {
        files = generate_counterexample(family_i, stem.empty() ? "counterexample" : stem);
      }
      for (const OutputFile& f : files) {
        const std::string path = out_dir + "/" + f.name;
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error("cannot write " + path);
        file << f.contents;
        out << path << '\n';
      }
      return 0;
    }
    if (volume->parsed()) {
      const Digraph d = io::read_instance(instance_path);
      if (sweep)
        out << cmd_volume_sweep(d);
      else
        out << dump(cmd_volume(d));
      return 0;
    }
    if (extract->parsed()) {
      const json map = io::read_json(map_path);
      const ReversalSet f = witness_from_json(io::read_json(witness_path));
      const std::string kind = map.value("kind", "");
      json result = {{"command", "extract"}, {"kind", kind}};
      if (kind == "ds") {
        GadgetMap gm;
        for (const json& g : map.at("gadgets"))
          gm.gadgets.push_back({g.at("u1"), g.at("u2"), g.at("d1"), g.at("d2"), g.at("au1"), g.at("au2"),
                                g.at("ad1"), g.at("ad2"), g.at("top_arc")});
        result["dominating_set"] = extract_dominating_set(f, gm);
      } else if (kind == "partition") {
        const PartitionInstance inst{map.at("values").get<std::vector<std::int64_t>>()};
        result["subset"] = extract_partition(f, inst, partition_to_weighted_kreversals(inst));
      } else {
        throw FormatError("sidecar kind \"" + kind + "\" has no decoder");
      }
      out << dump(result);
      return 0;
    }
  } catch (const std::exception& e) {
    out << dump(error_report(command, e.what()));
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace revdiam::cli
