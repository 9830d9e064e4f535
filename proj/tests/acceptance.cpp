// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance          run every criterion
//   acceptance 3 7      run only criteria 3 and 7
//
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "phylosemi/atlas.hpp"
#include "phylosemi/classify.hpp"
#include "phylosemi/decompose.hpp"
#include "phylosemi/families.hpp"
#include "phylosemi/generators.hpp"
#include "support/oracle.hpp"
#include "support/suite.hpp"

using namespace phylosemi;
using suite::lab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

template <class F>
void for_each_box(std::size_t m, int d, F&& f) {
  std::vector<int> x(m, 0);
  while (true) {
    f(Labeling(d, x));
    std::size_t i = m;
    while (i > 0 && x[i - 1] == d) x[--i] = 0;
    if (i == 0) return;
    ++x[i - 1];
  }
}

std::string list(const std::vector<Labeling>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? "," : "") + to_string(ws[i]);
  return out + "}";
}

// Minimal generators up to `cap` using only the oracle's membership test.
std::vector<Labeling> oracle_generators(const Graph& g, int cap) {
  oracle::MembershipOracle member(g);
  std::vector<std::vector<Labeling>> by_degree(cap + 1);
  std::vector<Labeling> gens;
  for (int d = 1; d <= cap; ++d) {
    for_each_box(g.num_edges(), d, [&](const Labeling& w) {
      if (!member(w)) return;
      by_degree[d].push_back(w);
      for (int k = 1; k < d; ++k)
        for (const auto& u : by_degree[k]) {
          Labeling rest = w - u;
          if (std::all_of(rest.labels.begin(), rest.labels.end(), [](int x) { return x >= 0; }) && member(rest))
            return;
        }
      gens.push_back(w);
    });
  }
  return gens;
}

Outcome theta_generators() {
  Outcome o;
  Graph t = theta();
  GeneratorReport r = minimal_generators(t, 3);
  std::set<Labeling> got(r.generators.begin(), r.generators.end());
  std::set<Labeling> want{lab(t, 1, {}), lab(t, 1, {{"a", 1}, {"b", 1}}), lab(t, 1, {{"a", 1}, {"c", 1}}),
                          lab(t, 1, {{"b", 1}, {"c", 1}})};
  o.require(got == want && r.generators.size() == 4, "generators " + list(r.generators));
  o.require(r.max_degree == 1 && !r.cap_hit, "max_degree " + std::to_string(r.max_degree));
  if (o.pass) o.detail = list(r.generators);
  return o;
}

Outcome bouquet_discrepancy() {
  Outcome o;
  Graph b = bouquet(2);
  Labeling both = lab(b, 1, {{"o1", 1}, {"o2", 1}});
  std::vector<Labeling> listed{lab(b, 1, {}), lab(b, 1, {{"o1", 1}}), lab(b, 1, {{"o2", 1}})};
  std::vector<Labeling> derived = listed;
  derived.push_back(both);
  std::sort(derived.begin(), derived.end());

  GeneratorReport r = minimal_generators(b, 3);
  o.require(r.generators == derived, "library generators " + list(r.generators));
  std::vector<Labeling> brute = oracle_generators(b, 3);
  o.require(brute == derived, "oracle generators " + list(brute));

  std::vector<Labeling> dropped;
  std::copy_if(r.generators.begin(), r.generators.end(), std::back_inserter(dropped),
               [&](const Labeling& w) { return w != both; });
  std::vector<Labeling> listed_sorted = listed;
  std::sort(listed_sorted.begin(), listed_sorted.end());
  o.require(dropped == listed_sorted, "after dropping (1;1,1): " + list(dropped));

  // (1;1,1) lies outside the semigroup the three listed generators span.
  bool spanned = false;
  for (const auto& u : listed) spanned = spanned || u == both;
  o.require(!spanned && oracle::is_member_oracle(b, both), "(1;1,1) status");
  if (o.pass)
    o.detail = "derived " + list(derived) + "; listed " + list(listed_sorted) +
               "; discrepancy: (1;1,1) is a member but not in the listed span";
  return o;
}

Outcome betti1_equivalence() {
  Outcome o;
  std::ostringstream os;
  for (int k = 3; k <= 5; ++k) {
    Graph p = polygon(k);
    int checked = 0;
    for (const auto& w : enumerate_degree(p, 2)) {
      o.require(is_deg2_indec_betti1(p, w) == is_indecomposable(p, w), "polygon(" + std::to_string(k) + ") " + to_string(w));
      ++checked;
    }
    MaxDegree m = max_generator_degree(p, 3);
    o.require(m.max_degree == 2 && !m.cap_hit, "polygon(" + std::to_string(k) + ") max_degree " +
                                                   std::to_string(m.max_degree));
    os << "k=" << k << ": " << checked << " members, max 2; ";
  }
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome polygon_counts() {
  Outcome o;
  std::ostringstream os;
  for (int k = 3; k <= 5; ++k) {
    Graph p = polygon(k);
    GeneratorReport r = minimal_generators(p, 3);
    int want = 1 << (k - 1);
    int got = r.per_degree_counts.count(2) ? r.per_degree_counts.at(2) : 0;
    int brute = 0;
    for (const auto& w : enumerate_degree(p, 2)) brute += !oracle::decomposable_by_search(p, w);
    o.require(got == want && brute == want, "polygon(" + std::to_string(k) + "): " + std::to_string(got) + " and " +
                                                std::to_string(brute) + ", want " + std::to_string(want));
    os << "k=" << k << ": " << got << " ";
  }
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome betti2_trichotomy() {
  Outcome o;
  struct Case {
    Graph g;
    Betti2Tag tag;
    int max;
  };
  std::vector<Case> cases{{theta(), Betti2Tag::NoFreeLegs, 1},
                          {two_polygons(3), Betti2Tag::CyclesInDifferentComponents, 2},
                          {shared_edge(), Betti2Tag::CyclesShareEdgeOrVertexWithFreeLeg, 2},
                          {dumbbell(1), Betti2Tag::CyclesSeparatedBySingleEdge, 2},
                          {dumbbell(2), Betti2Tag::CyclesSeparatedByInnerVertex, 3}};
  std::string values;
  for (const auto& c : cases) {
    Betti2Class cls = classify_betti2(c.g);
    MaxDegree m = max_generator_degree(c.g, 4);
    o.require(cls.tag == c.tag, c.g.name() + " tagged " + to_string(cls.tag));
    o.require(cls.max_degree == m.max_degree && m.max_degree == c.max && !m.cap_hit,
              c.g.name() + ": classified " + std::to_string(cls.max_degree) + ", searched " +
                  std::to_string(m.max_degree));
    values += (values.empty() ? "" : ",") + std::to_string(m.max_degree);
  }
  if (o.pass) o.detail = "(" + values + ")";
  return o;
}

Outcome degree3_witness() {
  Outcome o;
  Graph d = dumbbell(2);
  Labeling w = lab(d, 3, {{"a0", 2}, {"a1", 2}, {"a2", 2}, {"p0", 2}, {"p1", 2}, {"q1", 2}, {"b0", 2}, {"b1", 2}, {"b2", 2}});
  o.require(is_member(d, w), "witness is not a member");
  o.require(!oracle::decomposable_by_search(d, w), "witness decomposes");
  o.require(is_deg3_indec_sep(d, w), "witness fails the separated-cycle conditions");
  int members = 0, indec = 0;
  for (const auto& x : enumerate_degree(d, 3)) {
    bool truth = is_indecomposable(d, x);
    o.require(is_deg3_indec_sep(d, x) == truth, "mismatch at " + to_string(x));
    ++members;
    indec += truth;
  }
  if (o.pass) o.detail = std::to_string(members) + " degree-3 members, " + std::to_string(indec) + " indecomposable";
  return o;
}

Outcome degree3_uniqueness() {
  Outcome o;
  std::ostringstream os;
  for (int k : {3, 4}) {
    Graph p = polygon(k);
    auto nets = enumerate_networks(p);
    int three = 0, split = 0;
    for (const auto& w : enumerate_degree(p, 3)) {
      bool by_networks = false;
      for (std::size_t i = 0; i < nets.size() && !by_networks; ++i)
        for (std::size_t j = i; j < nets.size() && !by_networks; ++j) {
          Labeling rest = w - nets[i] - nets[j];
          by_networks = std::binary_search(nets.begin(), nets.end(), rest);
        }
      std::vector<std::pair<Labeling, Labeling>> splits;
      for (const auto& n : nets) {
        Labeling rest = w - n;
        if (std::all_of(rest.labels.begin(), rest.labels.end(), [](int x) { return x >= 0; }) && is_member(p, rest))
          splits.emplace_back(n, rest);
      }
      auto witness = deg3_polygon_characterize(p, w);
      if (by_networks) {
        ++three;
        o.require(!witness, "witness returned for a sum of networks " + to_string(w));
      } else {
        ++split;
        o.require(splits.size() == 1, to_string(w) + " has " + std::to_string(splits.size()) + " splits");
        o.require(witness && !splits.empty() && witness->w1 == splits[0].first && witness->w2 == splits[0].second,
                  "witness disagrees at " + to_string(w));
      }
    }
    os << "polygon(" << k << "): " << three << " by networks, " << split << " unique splits; ";
  }
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome tree_normality() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> size(2, 10);
  long members = 0;
  for (int i = 0; i < 10; ++i) {
    Graph t = suite::random_tree(rng, size(rng));
    GeneratorReport r = minimal_generators(t, 3);
    o.require(r.generators == enumerate_networks(t), "tree " + std::to_string(i) + " generators");
    for (int d = 1; d <= 3; ++d)
      for (const auto& w : enumerate_degree(t, d)) {
        auto pieces = decompose_tree_networks(t, w);
        Labeling sum = Labeling::zero(t, 0);
        for (const auto& p : pieces) {
          o.require(p.degree == 1 && is_member(t, p), "piece " + to_string(p));
          sum += p;
        }
        o.require(sum == w, "pieces do not sum to " + to_string(w));
        ++members;
      }
  }
  if (o.pass) o.detail = "10 trees, " + std::to_string(members) + " members decomposed";
  return o;
}

Outcome multi_edge_degree_one() {
  Outcome o;
  for (int g = 1; g <= 4; ++g) {
    MaxDegree m = max_generator_degree(multi_edge(g), 3);
    o.require(m.max_degree == 1 && !m.cap_hit, "multi_edge(" + std::to_string(g) + ") max " + std::to_string(m.max_degree));
  }
  if (o.pass) o.detail = "g=1..4 all 1";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937 rng(99);
  long exhaustive = 0, sampled = 0;
  for (const Graph& g : suite::all()) {
    oracle::MembershipOracle member(g);
    auto check = [&](const Labeling& w) {
      o.require(is_member(g, w) == member(w), g.name() + " " + to_string(w));
    };
    if (g.num_edges() <= 6) {
      for (int d = 0; d <= 3; ++d)
        for_each_box(g.num_edges(), d, [&](const Labeling& w) {
          check(w);
          ++exhaustive;
        });
      continue;
    }
    // Half uniform draws, half sums of networks with one label nudged.
    auto nets = enumerate_networks(g);
    std::uniform_int_distribution<int> degree(1, 3);
    std::uniform_int_distribution<std::size_t> net(0, nets.size() - 1), edge(0, g.num_edges() - 1);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int i = 0; i < 10000; ++i) {
      int d = degree(rng);
      Labeling w = Labeling::zero(g, d);
      if (i % 2 == 0) {
        std::uniform_int_distribution<int> label(0, d);
        for (auto& x : w.labels) x = label(rng);
      } else {
        for (int k = 0; k < d; ++k) w += nets[net(rng)];
        int& x = w[edge(rng)];
        x = std::clamp(x + coin(rng) - 1, 0, d);
      }
      check(w);
      ++sampled;
    }
  }
  if (o.pass) o.detail = std::to_string(exhaustive) + " exhaustive, " + std::to_string(sampled) + " sampled";
  return o;
}

Outcome branch_swap_property() {
  Outcome o;
  std::mt19937 rng(5);
  std::vector<Graph> trees{caterpillar(1), caterpillar(2), caterpillar(3), caterpillar(4)};
  for (int i = 0; i < 1000; ++i) {
    const Graph& t = trees[i % trees.size()];
    auto nets = enumerate_networks(t);
    std::uniform_int_distribution<std::size_t> pick(0, nets.size() - 1);
    std::uniform_int_distribution<std::size_t> vertex(0, t.inner_vertices().size() - 1);
    const Labeling& w1 = nets[pick(rng)];
    const Labeling& w2 = nets[pick(rng)];
    auto [a, b] = branch_swap(t, w1, w2, t.vertex(t.inner_vertices()[vertex(rng)]));
    o.require(a + b == w1 + w2, "sum changed for " + to_string(w1) + " + " + to_string(w2));
    o.require(a.degree == 1 && b.degree == 1 && is_member(t, a) && is_member(t, b),
              "non-network output for " + to_string(w1) + " + " + to_string(w2));
  }
  if (o.pass) o.detail = "1000 pairs";
  return o;
}

Outcome atlas_determinism() {
  Outcome o;
  struct Range {
    const char* family;
    int a, b;
  };
  const Range ranges[] = {{"bouquet", 3, 5}, {"multi_edge", 3, 5}, {"chain", 2, 4}};
  auto run = [&] {
    std::vector<AtlasRow> rows;
    for (const auto& r : ranges) run_atlas(r.family, r.a, r.b, std::nullopt, 2, {}, [&](const AtlasRow& row) {
        rows.push_back(row);
      });
    return rows;
  };
  auto first = run(), second = run();
  o.require(first.size() == 9 && second.size() == 9, "row count");
  std::string summary;
  for (std::size_t i = 0; i < std::min(first.size(), second.size()); ++i) {
    AtlasRow x = first[i], y = second[i];
    x.wall_ms = y.wall_ms = 0;
    o.require(atlas_csv(x) == atlas_csv(y), "rows differ: " + atlas_csv(x) + " vs " + atlas_csv(y));
    if (x.family == "multi_edge") o.require(x.max_degree == 1, "multi_edge row " + atlas_csv(x));
    summary += x.family + "(" + std::to_string(x.param) + ")=" + std::to_string(x.max_degree) +
               (x.cap_hit ? "*" : "") + " ";
  }
  if (o.pass) o.detail = summary;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"theta minimal generators", theta_generators},
      {"bouquet(2) generator set and listed discrepancy", bouquet_discrepancy},
      {"one-cycle degree-2 characterization", betti1_equivalence},
      {"polygon degree-2 generator counts", polygon_counts},
      {"two-cycle maximal degrees", betti2_trichotomy},
      {"separated-cycle degree-3 characterization", degree3_witness},
      {"degree-3 polygon split uniqueness", degree3_uniqueness},
      {"trees generated by networks", tree_normality},
      {"multi_edge generated in degree one", multi_edge_degree_one},
      {"membership agrees with the oracle", oracle_equivalence},
      {"branch swapping preserves networks", branch_swap_property},
      {"atlas rows are deterministic", atlas_determinism},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  if (selected.empty())
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(static_cast<int>(i));

  int failed = 0;
  for (int n : selected) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "no criterion %d\n", n);
      return 2;
    }
    const auto& c = criteria[n - 1];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", n, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
