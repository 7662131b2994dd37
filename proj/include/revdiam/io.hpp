#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "revdiam/digraph.hpp"
#include "revdiam/edge_polytope.hpp"

namespace revdiam::io {

using nlohmann::json;

/// {"n": int, "arcs": [{"tail": int, "head": int, "weight": int}]}; weight
/// defaults to 1. Throws FormatError on malformed input.
Digraph digraph_from_json(const json& j);
json digraph_to_json(const Digraph& d);

Digraph read_instance(const std::string& path);
void write_json(const std::string& path, const json& j);
json read_json(const std::string& path);

/// DOT text; arcs are labeled with their weight when it differs from 1.
std::string to_dot(const Digraph& d, const std::string& name = "G");

/// "inf" for infinite distances, a number otherwise.
json distance_to_json(const ExtendedDistance& d);

/// mask,diameter,volume_num,volume_den
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace revdiam::io
