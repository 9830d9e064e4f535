#include "phylosemi/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace phylosemi {

std::string to_string(Betti2Tag tag) {
  switch (tag) {
    case Betti2Tag::NoFreeLegs: return "NoFreeLegs";
    case Betti2Tag::CyclesInDifferentComponents: return "CyclesInDifferentComponents";
    case Betti2Tag::CyclesShareEdgeOrVertexWithFreeLeg: return "CyclesShareEdgeOrVertexWithFreeLeg";
    case Betti2Tag::CyclesSeparatedBySingleEdge: return "CyclesSeparatedBySingleEdge";
    case Betti2Tag::CyclesSeparatedByInnerVertex: return "CyclesSeparatedByInnerVertex";
  }
  return "";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_member(const Graph& g, const Labeling& w, int degree, const char* who) {
  require(w.degree == degree, std::string(who) + ": expected degree " + std::to_string(degree));
  require(is_member(g, w), std::string(who) + ": not a member");
}

bool has_valence_two(const Graph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) == 2) return true;
  return false;
}

// Cycle edges grouped by connected component of the cycle-edge subgraph.
std::vector<std::vector<std::size_t>> cycle_blocks(const Graph& g) {
  auto ce = cycle_edges(g);
  Graph h = induced_subgraph(g, ce);
  auto comp = component_of_vertices(h);
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < h.num_edges(); ++i) blocks[comp[h.endpoints(i)[0]]].push_back(ce[i]);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [c, edges] : blocks) out.push_back(std::move(edges));
  return out;
}

std::set<std::size_t> vertices_of(const Graph& g, const std::vector<std::size_t>& edges) {
  std::set<std::size_t> out;
  for (auto e : edges) out.insert(g.endpoints(e).begin(), g.endpoints(e).end());
  return out;
}

}  // namespace

SeparatedCycles separated_cycles(const Graph& g) {
  require(first_betti_number(g) == 2, "separated_cycles: first Betti number must be 2");
  auto blocks = cycle_blocks(g);
  require(blocks.size() == 2, "separated_cycles: the cycles share a vertex");
  auto comp = component_of_vertices(g);
  require(comp[g.endpoints(blocks[0][0])[0]] == comp[g.endpoints(blocks[1][0])[0]],
          "separated_cycles: the cycles lie in different components");

  auto from = vertices_of(g, blocks[0]);
  auto to = vertices_of(g, blocks[1]);
  std::vector<char> in_cycle(g.num_edges(), 0);
  for (const auto& b : blocks)
    for (auto e : b) in_cycle[e] = 1;

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.num_vertices(), none), via(g.num_vertices(), none);
  std::vector<int> ways(g.num_vertices(), 0);
  std::queue<std::size_t> q;
  for (auto v : from) {
    dist[v] = 0;
    ways[v] = 1;
    q.push(v);
  }
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t e : g.slots(v)) {
      if (in_cycle[e]) continue;
      const auto& [a, b] = g.endpoints(e);
      std::size_t w = (a == v) ? b : a;
      if (dist[w] == none) {
        dist[w] = dist[v] + 1;
        via[w] = e;
        ways[w] = ways[v];
        q.push(w);
      } else if (dist[w] == dist[v] + 1) {
        ways[w] = std::min(2, ways[w] + ways[v]);
      }
    }
  }

  std::size_t target = none;
  int ties = 0;
  for (auto v : to) {
    if (dist[v] == none) continue;
    if (target == none || dist[v] < dist[target]) {
      target = v;
      ties = ways[v];
    } else if (dist[v] == dist[target]) {
      ties += ways[v];
    }
  }
  require(target != none, "separated_cycles: no path between the cycles");
  require(ties == 1, "separated_cycles: shortest path between the cycles is not unique");

  SeparatedCycles out{blocks[0], blocks[1], {}};
  for (std::size_t v = target; dist[v] != 0;) {
    std::size_t e = via[v];
    out.path.push_back(e);
    const auto& [a, b] = g.endpoints(e);
    v = (a == v) ? b : a;
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

Betti2Class classify_betti2(const Graph& g) {
  require(first_betti_number(g) == 2, "classify_betti2: first Betti number must be 2");
  require(!has_valence_two(g), "classify_betti2: graph has a valence-2 vertex; normalize it first");
  if (cycle_legs(g).empty()) return {Betti2Tag::NoFreeLegs, 1};
  auto blocks = cycle_blocks(g);
  if (blocks.size() == 1) return {Betti2Tag::CyclesShareEdgeOrVertexWithFreeLeg, 2};
  auto comp = component_of_vertices(g);
  if (comp[g.endpoints(blocks[0][0])[0]] != comp[g.endpoints(blocks[1][0])[0]])
    return {Betti2Tag::CyclesInDifferentComponents, 2};
  auto sep = separated_cycles(g);
  if (sep.path.size() == 1) return {Betti2Tag::CyclesSeparatedBySingleEdge, 2};
  return {Betti2Tag::CyclesSeparatedByInnerVertex, 3};
}

// ---------------------------------------------------------------------------

PolygonRestriction polygon_restriction(const Graph& g, const Labeling& w, const std::vector<std::size_t>& cycle) {
  std::set<std::size_t> on_cycle(cycle.begin(), cycle.end());
  auto vertices = vertices_of(g, cycle);

  // Number of end slots each non-cycle edge has at cycle vertices.
  std::map<std::size_t, int> ends;
  for (auto v : vertices)
    for (std::size_t f : g.slots(v))
      if (!on_cycle.contains(f)) ++ends[f];

  std::vector<Edge> edges;
  std::vector<int> labels;
  std::vector<std::string> taken = g.edge_ids();
  std::vector<std::string> taken_vertices = g.vertices();
  for (auto e : cycle) {
    edges.push_back(g.edge(e));
    labels.push_back(w[e]);
  }
  for (auto v : vertices) {
    for (std::size_t f : g.slots(v)) {
      if (on_cycle.contains(f)) continue;
      std::string id = g.edge(f).id;
      if (ends[f] > 1) id = fresh_name(id + "@" + g.vertex(v), taken);
      taken.push_back(id);
      std::string leaf = fresh_name("x:" + id, taken_vertices);
      taken_vertices.push_back(leaf);
      edges.push_back({id, g.vertex(v), leaf});
      labels.push_back(w[f]);
    }
  }
  // Edge order in the new graph is by id; carry the labels along.
  std::map<std::string, int> by_id;
  for (std::size_t i = 0; i < edges.size(); ++i) by_id[edges[i].id] = labels[i];
  Graph r(std::move(edges), g.name());
  return {r, Labeling::from_map(r, w.degree, by_id)};
}

bool odd_legs_pattern(const PolygonRestriction& r) {
  if (r.labeling.degree != 2) return false;
  int twos = 0;
  for (std::size_t e = 0; e < r.graph.num_edges(); ++e) {
    int x = r.labeling[e];
    if (r.graph.is_leaf_edge(e)) {
      if (x == 2)
        ++twos;
      else if (x != 0)
        return false;
    } else if (x != 1) {
      return false;
    }
  }
  return twos % 2 == 1;
}

bool is_deg2_indec_betti1(const Graph& g, const Labeling& w) {
  require(first_betti_number(g) == 1, "is_deg2_indec_betti1: first Betti number must be 1");
  require_member(g, w, 2, "is_deg2_indec_betti1");
  return odd_legs_pattern(polygon_restriction(g, w, cycle_edges(g)));
}

std::optional<std::vector<std::size_t>> deg2_witness_cycle(const Graph& g, const Labeling& w) {
  require(g.is_trivalent(), "deg2_witness_cycle: graph is not trivalent");
  require_member(g, w, 2, "deg2_witness_cycle");
  for (auto& cycle : enumerate_cycles(g))
    if (odd_legs_pattern(polygon_restriction(g, w, cycle))) return cycle;
  return std::nullopt;
}

bool is_deg2_indec_trivalent(const Graph& g, const Labeling& w) { return deg2_witness_cycle(g, w).has_value(); }

// ---------------------------------------------------------------------------

bool is_polygon_graph(const Graph& g) {
  if (first_betti_number(g) != 1) return false;
  auto ce = cycle_edges(g);
  auto legs = cycle_legs(g);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (std::binary_search(ce.begin(), ce.end(), e)) continue;
    if (!std::binary_search(legs.begin(), legs.end(), e) || !g.is_leaf_edge(e)) return false;
  }
  return true;
}

std::optional<std::vector<Labeling>> polygon_networks(const Graph& g, const Labeling& w) {
  require(is_polygon_graph(g), "polygon_networks: not a polygon graph");
  const int d = w.degree;
  require(d >= 0 && d <= 8, "polygon_networks: degree out of range");
  if (!is_member(g, w)) return std::nullopt;
  if (d == 0) return std::vector<Labeling>{};

  const CycleLayout layout = cycle_layout(g);
  const std::size_t n = layout.vertices.size();
  const unsigned states = 1u << d;
  auto masks_with = [&](int count) {
    std::vector<unsigned> out;
    for (unsigned m = 0; m < states; ++m)
      if (std::popcount(m) == count) out.push_back(m);
    return out;
  };

  // For each vertex: xor of leg masks -> one choice of leg masks realizing it.
  std::vector<std::map<unsigned, std::vector<unsigned>>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::map<unsigned, std::vector<unsigned>> acc{{0u, {}}};
    for (std::size_t leg : layout.legs[i]) {
      std::map<unsigned, std::vector<unsigned>> next;
      for (const auto& [x, picked] : acc)
        for (unsigned m : masks_with(w[leg])) {
          auto it = next.find(x ^ m);
          if (it != next.end()) continue;
          auto p = picked;
          p.push_back(m);
          next.emplace(x ^ m, std::move(p));
        }
      acc = std::move(next);
    }
    choices[i] = std::move(acc);
  }

  // State on c_i is the set of networks using it; at v_i the state flips by the
  // xor of the leg masks, and the walk must close up on c_{n-1}.
  for (unsigned start : masks_with(w[layout.edges[n - 1]])) {
    std::vector<std::map<unsigned, std::pair<unsigned, unsigned>>> back(n);
    std::set<unsigned> cur{start};
    for (std::size_t i = 0; i < n; ++i) {
      std::set<unsigned> next;
      for (unsigned m : cur)
        for (const auto& [x, picked] : choices[i]) {
          unsigned m2 = m ^ x;
          if (std::popcount(m2) != w[layout.edges[i]] || back[i].contains(m2)) continue;
          back[i][m2] = {m, x};
          next.insert(m2);
        }
      cur = std::move(next);
    }
    if (!cur.contains(start)) continue;

    std::vector<Labeling> nets(d, Labeling::zero(g, 1));
    unsigned m = start;
    for (std::size_t i = n; i-- > 0;) {
      auto [prev, x] = back[i].at(m);
      for (int k = 0; k < d; ++k) nets[k][layout.edges[i]] = (m >> k) & 1;
      const auto& picked = choices[i].at(x);
      for (std::size_t j = 0; j < picked.size(); ++j)
        for (int k = 0; k < d; ++k) nets[k][layout.legs[i][j]] = (picked[j] >> k) & 1;
      m = prev;
    }
    std::sort(nets.begin(), nets.end());
    return nets;
  }
  return std::nullopt;
}

std::optional<Deg3Witness> deg3_polygon_characterize(const Graph& g, const Labeling& w) {
  require(is_polygon_graph(g) && g.is_trivalent(), "deg3_polygon_characterize: not a trivalent polygon graph");
  require_member(g, w, 3, "deg3_polygon_characterize");
  if (polygon_networks(g, w)) return std::nullopt;

  // Legs at 2 or 3 take value 2 in the degree-2 part, cycle edges take 1.
  auto ce = cycle_edges(g);
  Labeling w2 = Labeling::zero(g, 2);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    bool cyc = std::binary_search(ce.begin(), ce.end(), e);
    w2[e] = cyc ? 1 : (w[e] >= 2 ? 2 : 0);
  }
  Labeling w1 = w - w2;
  bool ok = is_member(g, w1) && is_member(g, w2) && odd_legs_pattern(PolygonRestriction{g, w2});
  if (!ok) throw std::logic_error("deg3_polygon_characterize: no degree 1 + degree 2 split for " + to_string(w));
  return Deg3Witness{w1, w2};
}

// ---------------------------------------------------------------------------

bool is_deg3_indec_sep(const Graph& g, const Labeling& w) {
  require(g.is_trivalent(), "is_deg3_indec_sep: graph is not trivalent");
  require(classify_betti2(g).tag == Betti2Tag::CyclesSeparatedByInnerVertex,
          "is_deg3_indec_sep: cycles are not separated by an inner vertex");
  require_member(g, w, 3, "is_deg3_indec_sep");

  auto sep = separated_cycles(g);
  for (const auto* cycle : {&sep.first_cycle, &sep.second_cycle}) {
    auto r = polygon_restriction(g, w, *cycle);
    if (!deg3_polygon_characterize(r.graph, r.labeling)) return false;
  }

  std::set<std::size_t> path(sep.path.begin(), sep.path.end());
  for (auto e : sep.path)
    if (w[e] != 1 && w[e] != 2) return false;

  std::set<std::size_t> inner_path_vertices;
  for (std::size_t i = 0; i + 1 < sep.path.size(); ++i) {
    const auto& a = g.endpoints(sep.path[i]);
    const auto& b = g.endpoints(sep.path[i + 1]);
    for (auto v : a)
      if (v == b[0] || v == b[1]) inner_path_vertices.insert(v);
  }
  int middle = 0;
  for (auto v : inner_path_vertices)
    for (std::size_t f : g.slots(v)) {
      if (path.contains(f)) continue;
      if (w[f] == 1 || w[f] == 2)
        ++middle;
      else if (w[f] != 0 && w[f] != 3)
        return false;
    }
  return middle == 1;
}

// ---------------------------------------------------------------------------

std::string generator_tag(const Graph& g, const Labeling& w) {
  if (w.degree == 1) return "Network";
  if (w.degree == 2) {
    for (const auto& cycle : enumerate_cycles(g))
      if (odd_legs_pattern(polygon_restriction(g, w, cycle))) return "Deg2OddLegs";
  }
  if (w.degree == 3 && g.is_trivalent() && first_betti_number(g) == 2 && !has_valence_two(g)) {
    auto blocks = cycle_blocks(g);
    auto comp = component_of_vertices(g);
    bool separated = blocks.size() == 2 && comp[g.endpoints(blocks[0][0])[0]] == comp[g.endpoints(blocks[1][0])[0]];
    if (separated && classify_betti2(g).tag == Betti2Tag::CyclesSeparatedByInnerVertex && is_deg3_indec_sep(g, w))
      return "Deg3Separated";
  }
  return "Unclassified";
}

}  // namespace phylosemi
