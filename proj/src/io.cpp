#include "revdiam/io.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "revdiam/error.hpp"

namespace revdiam::io {

namespace {

std::int64_t integer_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  if (!it->is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return it->get<std::int64_t>();
}

}  // namespace

Digraph digraph_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("instance must be a JSON object");
  const std::int64_t n = integer_field(j, "n");
  if (n < 0 || n > std::numeric_limits<VertexId>::max()) throw FormatError("vertex count out of range");
  const auto arcs = j.find("arcs");
  if (arcs == j.end() || !arcs->is_array()) throw FormatError("missing array \"arcs\"");
  Digraph d(static_cast<VertexId>(n));
  for (const json& a : *arcs) {
    if (!a.is_object()) throw FormatError("arc must be an object");
    const std::int64_t tail = integer_field(a, "tail");
    const std::int64_t head = integer_field(a, "head");
    const std::int64_t weight = a.contains("weight") ? integer_field(a, "weight") : 1;
    if (tail < 0 || tail >= n || head < 0 || head >= n) throw FormatError("arc endpoint out of range");
    try {
      d.add_arc(static_cast<VertexId>(tail), static_cast<VertexId>(head), weight);
    } catch (const InvalidArgument& e) {
      throw FormatError(e.what());
    }
  }
  return d;
}

json digraph_to_json(const Digraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({{"tail", a.tail}, {"head", a.head}, {"weight", a.weight}});
  return {{"n", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Digraph read_instance(const std::string& path) { return digraph_from_json(read_json(path)); }

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string to_dot(const Digraph& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (VertexId v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
  for (ArcId id = 0; id < d.arc_count(); ++id) {
    const Arc& a = d.arc(id);
    out << "  " << a.tail << " -> " << a.head << " [id=" << id;
    if (a.weight != 1) out << ", label=\"" << a.weight << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

json distance_to_json(const ExtendedDistance& d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "mask,diameter,volume_num,volume_den\n";
  for (const SweepRow& r : rows) {
    out << r.mask << ',';
    if (r.diameter.is_finite())
      out << r.diameter.value();
    else
      out << "inf";
    out << ',' << numerator(r.volume.value) << ',' << denominator(r.volume.value) << '\n';
  }
}

}  // namespace revdiam::io
