#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phylosemi {

/// An undirected edge between two named vertices. `u == v` encodes a loop.
struct Edge {
  std::string id;
  std::string u;
  std::string v;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multigraph with loops, parallel edges and leaf edges.
///
/// Edges are stored sorted by id (the canonical edge order used by every
/// labeling), vertices sorted by name. A loop contributes two end slots to its
/// vertex, so it counts twice towards the valence. A leaf vertex has valence 1;
/// every other vertex is inner. Values are immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Edge> edges, std::string name = {});

  const std::string& name() const { return name_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
  std::size_t num_vertices() const { return vertices_.size(); }

  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::optional<std::size_t> find_vertex(std::string_view name) const;
  /// Throws std::invalid_argument for unknown ids.
  std::size_t edge_index(std::string_view id) const;
  std::size_t vertex_index(std::string_view name) const;

  /// Vertex indices of both endpoints (equal for a loop).
  const std::array<std::size_t, 2>& endpoints(std::size_t e) const { return ends_.at(e); }

  /// End slots at a vertex: incident edge indices in edge order, a loop listed
  /// twice in adjacent slots.
  std::span<const std::size_t> slots(std::size_t v) const { return slots_.at(v); }
  std::size_t valence(std::size_t v) const { return slots_.at(v).size(); }

  bool is_leaf_vertex(std::size_t v) const { return valence(v) == 1; }
  bool is_inner_vertex(std::size_t v) const { return valence(v) != 1; }
  bool is_leaf_edge(std::size_t e) const;
  bool is_inner_edge(std::size_t e) const { return !is_leaf_edge(e); }
  const std::vector<std::size_t>& inner_vertices() const { return inner_; }

  /// True when every inner vertex has valence exactly three.
  bool is_trivalent() const;

  std::vector<std::string> edge_ids() const;
  Graph renamed(std::string name) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.name_ == b.name_ && a.edges_ == b.edges_;
  }

 private:
  std::string name_;
  std::vector<Edge> edges_;
  std::vector<std::string> vertices_;
  std::vector<std::array<std::size_t, 2>> ends_;
  std::vector<std::vector<std::size_t>> slots_;
  std::vector<std::size_t> inner_;
};

/// Returns a name not in `taken`, starting from `base`.
std::string fresh_name(const std::string& base, const std::vector<std::string>& taken);

// ---------------------------------------------------------------------------
// Structure

/// Per-vertex component index, numbered in order of first vertex.
std::vector<std::size_t> component_of_vertices(const Graph& g);
std::size_t num_components(const Graph& g);

/// |E| - |V| + #components.
int first_betti_number(const Graph& g);

/// Non-bridge edges (loops included), ascending edge index.
std::vector<std::size_t> cycle_edges(const Graph& g);
bool is_cycle_edge(const Graph& g, std::size_t e);

/// Non-cycle edges sharing a vertex with some cycle edge.
std::vector<std::size_t> cycle_legs(const Graph& g);

/// Every closed trail with unrepeated edges, as a sorted edge-index set.
/// These are the nonempty connected even subgraphs, found by walking the
/// cycle space. Ordered by size, then lexicographically.
std::vector<std::vector<std::size_t>> enumerate_cycles(const Graph& g);

/// Subgraph on the given edges; vertices are those the edges touch.
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> edges);

/// Splits into connected components, ordered by smallest edge index.
std::vector<Graph> components(const Graph& g);

// ---------------------------------------------------------------------------
// Cutting

struct CutResult {
  Graph graph;
  /// Ids of the fresh leaf edges e' (at the first end) and e'' (at the second).
  std::array<std::string, 2> new_leaves;
};

/// Replaces inner edge `id` by two leaf edges. Rejects leaf edges.
CutResult cut_edge(const Graph& g, std::string_view id);

struct AssociatedTree {
  Graph tree;
  /// Distinguished leaf pairs (e', e''), in cut order.
  std::vector<std::array<std::string, 2>> pairs;
  /// Tree edge id -> id of the edge it came from in the source graph.
  std::map<std::string, std::string> origin;
};

/// Cuts cycle edges until the graph is a forest. Each step cuts the
/// lexicographically largest remaining cycle edge, so the smallest ids stay
/// in the tree.
AssociatedTree associated_tree(const Graph& g);

/// Glues every distinguished pair back into its original edge.
Graph reglue(const AssociatedTree& t, std::string name);

// ---------------------------------------------------------------------------
// Normal forms

struct Suppressed {
  Graph graph;
  /// Edge id in `graph` -> the source edge ids it replaces (ascending).
  std::map<std::string, std::vector<std::string>> provenance;
};

/// Repeatedly merges the two edges at a valence-2 vertex into one edge that
/// keeps the smaller id. A cycle of valence-2 vertices ends as a loop.
Suppressed suppress_degree2(const Graph& g);

struct Refinement {
  Graph graph;
  /// Ids of edges introduced by splitting; forgetting them projects back.
  std::vector<std::string> new_edges;
};

/// Splits every vertex of valence > 3 until all inner vertices are trivalent.
/// A split vertex v becomes v' (two of the old ends) and v'' (the rest) joined
/// by a new edge; on a cycle, the two ends given to v' are chosen so the new
/// edge is a cycle edge and no cycle leg is created. Requires no valence-2
/// vertex.
Refinement trivalent_refinement(const Graph& g);

struct PolygonCore {
  /// Non-cycle inner edges cut to shed the trees, ascending id.
  std::vector<std::string> cut_edges;
  Graph core;
  std::vector<Graph> trees;
};

/// Cuts every maximal tree of more than one edge hanging off the cycles.
/// Whole tree components go to `trees` uncut. Rejects forests.
PolygonCore multiple_polygon_core(const Graph& g);

/// Cyclic layout of a graph whose cycle edges form exactly one cycle.
struct CycleLayout {
  /// Cycle vertices v_0..v_{n-1}.
  std::vector<std::size_t> vertices;
  /// c_i joins v_i and v_{i+1 mod n}.
  std::vector<std::size_t> edges;
  /// Non-cycle edges incident to each v_i (one entry per end slot).
  std::vector<std::vector<std::size_t>> legs;
};

/// Walks the unique cycle starting at the smallest cycle vertex, leaving
/// along its smaller cycle edge. Throws unless Betti number is 1.
CycleLayout cycle_layout(const Graph& g);

}  // namespace phylosemi
