#include <doctest.h>

#include <algorithm>
#include <set>

#include "phylosemi/families.hpp"
#include "phylosemi/generators.hpp"
#include "support/oracle.hpp"
#include "support/suite.hpp"

using namespace phylosemi;
using suite::lab;

namespace {

// Can w be written as a sum of the given generators (degrees included)?
bool in_span(const Graph& g, const Labeling& w, const std::vector<Labeling>& gens, std::size_t from = 0) {
  if (w.degree == 0) return std::all_of(w.labels.begin(), w.labels.end(), [](int x) { return x == 0; });
  for (std::size_t i = from; i < gens.size(); ++i) {
    const Labeling& u = gens[i];
    if (u.degree > w.degree) continue;
    bool fits = true;
    for (std::size_t e = 0; e < g.num_edges() && fits; ++e) fits = u[e] <= w[e];
    if (fits && in_span(g, w - u, gens, i)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("is_indecomposable examples") {
  CHECK(is_indecomposable(theta(), lab(theta(), 1, {{"a", 1}, {"b", 1}})));
  Graph p3 = polygon(3);
  CHECK(is_indecomposable(p3, lab(p3, 2, {{"c0", 1}, {"c1", 1}, {"c2", 1}, {"l0", 2}})));
  Graph p4 = polygon(4);
  CHECK_FALSE(is_indecomposable(p4, lab(p4, 2, {{"c0", 1}, {"c1", 1}, {"c2", 1}, {"c3", 1}, {"l0", 2}, {"l1", 2}})));
  CHECK_THROWS_AS(is_indecomposable(theta(), lab(theta(), 1, {{"a", 1}})), std::invalid_argument);
  CHECK_THROWS_AS(is_indecomposable(theta(), Labeling::zero(theta(), 0)), std::invalid_argument);
}

TEST_CASE("is_indecomposable agrees with exhaustive search") {
  for (const Graph& g : suite::all()) {
    if (g.num_edges() > 8) continue;
    CAPTURE(g.name());
    for (int d = 2; d <= 3; ++d)
      for (const auto& w : enumerate_degree(g, d)) CHECK(is_indecomposable(g, w) == !oracle::decomposable_by_search(g, w));
  }
}

TEST_CASE("minimal_generators examples") {
  Graph t = theta();
  GeneratorReport r = minimal_generators(t, 3);
  CHECK(r.generators == std::vector<Labeling>{lab(t, 1, {}), lab(t, 1, {{"b", 1}, {"c", 1}}),
                                               lab(t, 1, {{"a", 1}, {"c", 1}}), lab(t, 1, {{"a", 1}, {"b", 1}})});
  CHECK(r.max_degree == 1);
  CHECK_FALSE(r.cap_hit);
  CHECK(r.cap_used == 3);

  GeneratorReport p = minimal_generators(polygon(3), 3);
  CHECK(p.per_degree_counts.at(2) == 4);
  CHECK(p.max_degree == 2);
  CHECK_FALSE(p.cap_hit);

  GeneratorReport c = minimal_generators(caterpillar(3), 2);
  CHECK(c.generators == enumerate_networks(caterpillar(3)));
  CHECK(c.max_degree == 1);

  // At the default cap the polygon's degree-2 generators sit at the cap.
  CHECK(minimal_generators(polygon(3), default_cap(polygon(3))).cap_hit);
}

TEST_CASE("max_generator_degree examples") {
  CHECK(max_generator_degree(multi_edge(4), 3).max_degree == 1);
  MaxDegree d = max_generator_degree(dumbbell(2), 4);
  CHECK(d.max_degree == 3);
  CHECK_FALSE(d.cap_hit);
  CHECK(max_generator_degree(shared_edge(), 3).max_degree == 2);
  CHECK(default_cap(theta()) == 3);
}

TEST_CASE("report invariants on the suite") {
  for (const Graph& g : suite::all()) {
    if (g.num_edges() > 11) continue;
    CAPTURE(g.name());
    int cap = std::min(3, default_cap(g));
    GeneratorReport r = minimal_generators(g, cap);
    CHECK(std::is_sorted(r.generators.begin(), r.generators.end()));
    std::map<int, int> counts;
    for (const auto& w : r.generators) {
      CHECK(is_member(g, w));
      CHECK_FALSE(oracle::decomposable_by_search(g, w));
      ++counts[w.degree];
    }
    CHECK(counts == r.per_degree_counts);
    CHECK(r.max_degree == (r.generators.empty() ? 0 : r.generators.back().degree));
    CHECK(r.cap_hit == (r.max_degree == cap));

    int betti = first_betti_number(g);
    if (betti == 0) CHECK(r.max_degree == 1);
    if (betti == 1) CHECK(r.max_degree <= 2);
    if (betti == 2) CHECK(r.max_degree <= 3);

    for (int d = 1; d <= std::min(cap, 3); ++d)
      for (const auto& w : enumerate_degree(g, d)) CHECK(in_span(g, w, r.generators));
  }
}
