#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phylosemi/graph.hpp"
#include "phylosemi/semigroup.hpp"

namespace phylosemi {

enum class Betti2Tag {
  NoFreeLegs,
  CyclesInDifferentComponents,
  CyclesShareEdgeOrVertexWithFreeLeg,
  CyclesSeparatedBySingleEdge,
  CyclesSeparatedByInnerVertex,
};

std::string to_string(Betti2Tag tag);

struct Betti2Class {
  Betti2Tag tag;
  int max_degree;
};

/// Structural case analysis of a normalized graph with first Betti number 2.
/// Throws std::invalid_argument on other Betti numbers, on a valence-2 vertex,
/// or when the shortest path between the two cycles is not unique.
Betti2Class classify_betti2(const Graph& g);

/// The two cycles of a Betti-2 graph whose cycles are vertex-disjoint, and
/// the unique shortest path between them.
struct SeparatedCycles {
  std::vector<std::size_t> first_cycle;
  std::vector<std::size_t> second_cycle;
  std::vector<std::size_t> path;
};
SeparatedCycles separated_cycles(const Graph& g);

/// A cycle together with one leg per end slot it does not use. A chord of the
/// cycle contributes two legs, `id@u` and `id@v`, each carrying the chord's
/// label. Legs become leaf edges.
struct PolygonRestriction {
  Graph graph;
  Labeling labeling;
};
PolygonRestriction polygon_restriction(const Graph& g, const Labeling& w, const std::vector<std::size_t>& cycle);

/// Cycle edges all 1, an odd number of leg ends at 2 and the other leg ends 0.
bool odd_legs_pattern(const PolygonRestriction& r);

/// Degree-2 indecomposability on a graph with first Betti number 1, read off
/// its unique cycle and cycle legs. Throws on other Betti numbers, degrees or
/// non-members.
bool is_deg2_indec_betti1(const Graph& g, const Labeling& w);

/// Degree-2 indecomposability on a trivalent graph: some cycle with its legs
/// shows the odd-legs pattern. Returns that cycle (edge indices) or nothing.
/// Throws on non-trivalent graphs, other degrees or non-members.
std::optional<std::vector<std::size_t>> deg2_witness_cycle(const Graph& g, const Labeling& w);
bool is_deg2_indec_trivalent(const Graph& g, const Labeling& w);

/// Degree-3 indecomposability on a trivalent Betti-2 graph whose cycles are
/// separated by at least one inner vertex.
bool is_deg3_indec_sep(const Graph& g, const Labeling& w);

/// Split of a degree-3 polygon labeling that is not a sum of three networks.
struct Deg3Witness {
  Labeling w1;  // degree 1
  Labeling w2;  // degree 2, odd-legs pattern
};

/// d networks summing to w on a polygon graph (one cycle plus leaf legs),
/// found by a transfer-matrix walk around the cycle. Empty if none exist.
std::optional<std::vector<Labeling>> polygon_networks(const Graph& g, const Labeling& w);

/// Nothing when w is a sum of three networks, else the (w1, w2) split.
/// Requires a trivalent polygon graph, degree 3 and membership.
std::optional<Deg3Witness> deg3_polygon_characterize(const Graph& g, const Labeling& w);

/// One of Network, Deg2OddLegs, Deg3Separated, Unclassified.
std::string generator_tag(const Graph& g, const Labeling& w);

/// True for a graph with first Betti number 1 in which every non-cycle edge
/// is a leaf leg of the cycle.
bool is_polygon_graph(const Graph& g);

}  // namespace phylosemi
