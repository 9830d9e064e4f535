#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "phylosemi/classify.hpp"
#include "phylosemi/graph.hpp"
#include "phylosemi/semigroup.hpp"

namespace phylosemi {

/// deg w networks summing to w on a forest, first solution in lexicographic
/// order. Throws std::invalid_argument for non-members or graphs with cycles.
std::vector<Labeling> decompose_tree_networks(const Graph& t, const Labeling& w);

/// Cuts inner edge `e`, decomposes on the cut graph and glues the pieces back.
/// On a bridge the pieces of both sides are matched by degree and cut label;
/// on a cycle edge pieces with equal labels at e' and e'' lift directly and the
/// rest are paired up. Returns pieces (members of g, summing to w) when at
/// least two come out, nothing otherwise (a leaf edge gives nothing).
std::optional<std::vector<Labeling>> cut_and_lift(const Graph& g, const Labeling& w, std::string_view e, int cap);

/// At trivalent vertex v, finds the first end slot where w1 and w2 agree and
/// exchanges their values on the branch hanging off that slot.
std::pair<Labeling, Labeling> branch_swap(const Graph& t, const Labeling& w1, const Labeling& w2, std::string_view v);

/// Indecomposable members summing to w, sorted. Throws std::runtime_error
/// when w has degree above `cap` and no generator of degree <= cap splits off.
std::vector<Labeling> decompose_full(const Graph& g, const Labeling& w, int cap);

/// Degree-3 polygon labeling as three networks, or its degree 1 + degree 2 split.
struct Deg3Split {
  std::vector<Labeling> networks;
  std::optional<Deg3Witness> witness;
};
Deg3Split split_deg3(const Graph& g, const Labeling& w);

}  // namespace phylosemi
