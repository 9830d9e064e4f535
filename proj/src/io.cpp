#include "phylosemi/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace phylosemi {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

json labeling_json(const Graph& g, const Labeling& w) {
  json labels = json::object();
  for (std::size_t e = 0; e < g.num_edges(); ++e) labels[g.edge(e).id] = w[e];
  return {{"degree", w.degree}, {"labels", labels}};
}

Labeling labeling_from_json(const Graph& g, const json& j) {
  int degree = as_int(field(j, "degree"), "degree");
  const json& labels = field(j, "labels");
  if (!labels.is_object()) throw ParseError("'labels' must be an object");
  std::map<std::string, int> values;
  for (auto it = labels.begin(); it != labels.end(); ++it) values[it.key()] = as_int(it.value(), "label");
  try {
    return Labeling::from_map(g, degree, values);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "{\n  \"edges\": [\n";
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    json rec = {{"ends", {edge.u, edge.v}}, {"id", edge.id}};
    os << "    " << rec.dump() << (e + 1 < g.num_edges() ? ",\n" : "\n");
  }
  os << "  ],\n  \"name\": " << json(g.name()).dump() << "\n}\n";
  return os.str();
}

Graph parse_graph(const std::string& text) {
  json j = parse_json(text);
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("'edges' must be an array");
  std::string name;
  if (j.contains("name") && !j["name"].is_null()) name = as_string(j["name"], "name");
  std::vector<Edge> out;
  for (const json& rec : edges) {
    std::string id = as_string(field(rec, "id"), "edge id");
    const json& ends = field(rec, "ends");
    if (!ends.is_array() || ends.size() != 2) throw ParseError("edge '" + id + "': 'ends' must hold two vertices");
    out.push_back({id, as_string(ends[0], "vertex"), as_string(ends[1], "vertex")});
  }
  try {
    return Graph(std::move(out), std::move(name));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_labeling(const Graph& g, const Labeling& w) { return labeling_json(g, w).dump(2) + "\n"; }

Labeling parse_labeling(const Graph& g, const std::string& text) { return labeling_from_json(g, parse_json(text)); }

std::string serialize_labelings(const Graph& g, const std::vector<Labeling>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(labeling_json(g, w));
  return arr.dump(2) + "\n";
}

std::vector<Labeling> parse_labelings(const Graph& g, const std::string& text) {
  json j = parse_json(text);
  if (!j.is_array()) throw ParseError("expected an array of labelings");
  std::vector<Labeling> out;
  for (const json& item : j) out.push_back(labeling_from_json(g, item));
  return out;
}

std::string report_json(const Graph& g, const GeneratorReport& r, const std::vector<std::string>& tags) {
  json gens = json::array();
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    json item = labeling_json(g, r.generators[i]);
    item["tag"] = i < tags.size() ? tags[i] : "Unclassified";
    gens.push_back(std::move(item));
  }
  json counts = json::object();
  for (const auto& [d, n] : r.per_degree_counts) counts[std::to_string(d)] = n;
  json out = {{"graph", g.name()},   {"generators", gens},   {"per_degree_counts", counts},
              {"max_degree", r.max_degree}, {"cap_used", r.cap_used}, {"cap_hit", r.cap_hit}};
  return out.dump(2) + "\n";
}

std::string report_csv(const Graph& g, const GeneratorReport& r, const std::vector<std::string>& tags) {
  std::ostringstream os;
  os << "degree";
  for (const auto& e : g.edges()) os << ',' << e.id;
  os << ",tag\n";
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    const Labeling& w = r.generators[i];
    os << w.degree;
    for (int x : w.labels) os << ',' << x;
    os << ',' << (i < tags.size() ? tags[i] : "Unclassified") << '\n';
  }
  return os.str();
}

std::string report_text(const Graph& g, const GeneratorReport& r, const std::vector<std::string>& tags) {
  std::ostringstream os;
  os << "graph " << (g.name().empty() ? "(unnamed)" : g.name()) << ": " << g.num_edges() << " edges, betti "
     << first_betti_number(g) << '\n';
  os << "edges:";
  for (const auto& e : g.edges()) os << ' ' << e.id;
  os << '\n';
  for (std::size_t i = 0; i < r.generators.size(); ++i)
    os << "  " << to_string(r.generators[i]) << "  " << (i < tags.size() ? tags[i] : "Unclassified") << '\n';
  os << "counts:";
  for (const auto& [d, n] : r.per_degree_counts) os << " deg" << d << '=' << n;
  os << "\nmax_degree=" << r.max_degree << " cap=" << r.cap_used << " cap_hit=" << (r.cap_hit ? "true" : "false")
     << '\n';
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace phylosemi
