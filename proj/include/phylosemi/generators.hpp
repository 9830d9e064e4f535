#pragma once

#include <map>
#include <vector>

#include "phylosemi/graph.hpp"
#include "phylosemi/semigroup.hpp"

namespace phylosemi {

struct GeneratorReport {
  std::vector<Labeling> generators;
  std::map<int, int> per_degree_counts;
  int max_degree = 0;
  int cap_used = 0;
  /// Set when indecomposables exist at the cap itself, so higher degrees may
  /// still hold generators.
  bool cap_hit = false;
};

/// True when no member u with 1 <= deg u < deg w leaves a member w − u.
/// Throws std::invalid_argument for non-members and degree 0.
bool is_indecomposable(const Graph& g, const Labeling& w);

/// Every indecomposable member of degree at most `cap`, by degree then labels.
GeneratorReport minimal_generators(const Graph& g, int cap);

struct MaxDegree {
  int max_degree = 0;
  bool cap_hit = false;
};
MaxDegree max_generator_degree(const Graph& g, int cap);

/// first Betti number + 1.
int default_cap(const Graph& g);

}  // namespace phylosemi
