#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "revdiam/exact_solver.hpp"
#include "revdiam/io.hpp"
#include "revdiam/reductions.hpp"

namespace revdiam::cli {

using io::json;

enum class Algo { Auto, Brute, Cactus, Oracle };

struct SolveRequest {
  std::int64_t d = 2;
  std::int64_t k = 0;
  CostMode mode = CostMode::Cardinality;
  Algo algo = Algo::Auto;
  SearchStrategy strategy = SearchStrategy::Pruned;
  unsigned threads = 1;
  std::size_t oracle_cap = kDefaultOracleArcCap;
};

/// Exit code plus JSON report: 0 Feasible, 1 Infeasible, 2 Error.
struct CommandResult {
  int exit_code = 0;
  json report;
};

json instance_digest(const Digraph& d);

CommandResult cmd_solve(const Digraph& d, const SolveRequest& req);

/// Recomputes diameter and cost of `witness` from scratch.
CommandResult cmd_verify(const Digraph& d, const ReversalSet& witness, std::int64_t target,
                         std::optional<std::int64_t> budget, CostMode mode);

/// Reads a bare id array or an object with a "witness" array.
ReversalSet witness_from_json(const json& j);

struct OutputFile {
  std::string name;
  std::string contents;
};

std::vector<OutputFile> generate_ds(const DominatingSetInstance& inst, const std::string& stem);
std::vector<OutputFile> generate_partition(const PartitionInstance& inst, const std::string& stem);
std::vector<OutputFile> generate_counterexample(std::int64_t i, const std::string& stem);

json cmd_volume(const Digraph& d);
std::string cmd_volume_sweep(const Digraph& d);

/// REVDIAM_ORACLE_CAP when set and valid, the library default otherwise.
std::size_t oracle_cap_from_env();

/// Full command line without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revdiam::cli
