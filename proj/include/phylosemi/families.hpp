#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phylosemi/graph.hpp"

namespace phylosemi {

/// Two vertices u, v joined by edges a, b, c.
Graph theta();

/// k-cycle with one leg per cycle vertex. Cycle edges c0..c{k-1} join
/// v_i and v_{i+1}; leg l_i hangs off v_i. k = 1 is a loop with one leg.
Graph polygon(int k);

/// One vertex w carrying g loops o1..og.
Graph bouquet(int g);

/// Two vertices u, v with g+1 parallel edges e0..e{g}. multi_edge(2) is a theta.
Graph multi_edge(int g);

/// Trivalent tree with n inner vertices on a spine; caterpillar(1) is the tripod.
Graph caterpillar(int n);

/// Star with k leaves.
Graph claw(int k);

/// Two triangles joined by a path of L edges. Each inner path vertex carries a
/// pendant leaf q_i, each non-attachment triangle vertex one leg, so the graph
/// is trivalent for L >= 1. dumbbell(0) glues the triangles at a vertex.
Graph dumbbell(int L);

/// Two triangles sharing the edge m, with one leg on each unshared vertex.
Graph shared_edge();

/// Two triangles sharing one vertex; the same graph as dumbbell(0).
Graph shared_vertex();

/// Two disjoint copies of polygon(k).
Graph two_polygons(int k);

/// k loops o_i at v_i, consecutive loop vertices joined by path edges p_i.
/// Requires k >= 2.
Graph chain(int k);

/// Names accepted by family().
std::vector<std::string> family_names();

/// Builds a family member by name. Throws std::invalid_argument on an unknown
/// name or bad parameters.
Graph family(std::string_view name, std::span<const int> params);

}  // namespace phylosemi
