#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "phylosemi/generators.hpp"
#include "phylosemi/graph.hpp"
#include "phylosemi/semigroup.hpp"

namespace phylosemi {

/// Malformed input text or file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON: keys sorted, one edge record per line, edges by id.
///   {"edges": [{"ends": ["u","v"], "id": "a"}, ...], "name": "theta"}
std::string serialize_graph(const Graph& g);
Graph parse_graph(const std::string& text);

/// {"degree": d, "labels": {"a": 1, ...}}
std::string serialize_labeling(const Graph& g, const Labeling& w);
Labeling parse_labeling(const Graph& g, const std::string& text);

/// JSON array of labelings.
std::string serialize_labelings(const Graph& g, const std::vector<Labeling>& ws);
std::vector<Labeling> parse_labelings(const Graph& g, const std::string& text);

/// Report with one tag per generator.
std::string report_json(const Graph& g, const GeneratorReport& r, const std::vector<std::string>& tags);
/// Header `degree,<edge ids...>,tag`, one row per generator.
std::string report_csv(const Graph& g, const GeneratorReport& r, const std::vector<std::string>& tags);
std::string report_text(const Graph& g, const GeneratorReport& r, const std::vector<std::string>& tags);

/// Reads a whole file. Throws ParseError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace phylosemi
