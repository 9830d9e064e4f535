#include "phylosemi/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace phylosemi {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

Graph::Graph(std::vector<Edge> edges, std::string name) : name_(std::move(name)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id.empty()) throw std::invalid_argument("edge with empty id");
    if (e.u.empty() || e.v.empty()) throw std::invalid_argument("edge '" + e.id + "' has an empty endpoint");
    if (i > 0 && edges_[i - 1].id == e.id) throw std::invalid_argument("duplicate edge id '" + e.id + "'");
    vertices_.push_back(e.u);
    vertices_.push_back(e.v);
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  slots_.resize(vertices_.size());
  ends_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    std::size_t a = vertex_index(edges_[i].u);
    std::size_t b = vertex_index(edges_[i].v);
    ends_.push_back({a, b});
    slots_[a].push_back(i);
    slots_[b].push_back(i);
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (is_inner_vertex(v)) inner_.push_back(v);
}

std::optional<std::size_t> Graph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<std::size_t> Graph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw std::invalid_argument("unknown edge '" + std::string(id) + "'");
}

std::size_t Graph::vertex_index(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

bool Graph::is_leaf_edge(std::size_t e) const {
  const auto& [a, b] = ends_.at(e);
  return is_leaf_vertex(a) || is_leaf_vertex(b);
}

bool Graph::is_trivalent() const {
  return std::all_of(inner_.begin(), inner_.end(), [&](std::size_t v) { return valence(v) == 3; });
}

std::vector<std::string> Graph::edge_ids() const {
  std::vector<std::string> ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  return ids;
}

Graph Graph::renamed(std::string name) const { return Graph(edges_, std::move(name)); }

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
  if (!used(base)) return base;
  for (int k = 1;; ++k) {
    std::string candidate = base + "#" + std::to_string(k);
    if (!used(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> component_of_vertices(const Graph& g) {
  UnionFind uf(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) uf.unite(g.endpoints(e)[0], g.endpoints(e)[1]);
  std::vector<std::size_t> comp(g.num_vertices());
  std::map<std::size_t, std::size_t> number;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto [it, inserted] = number.try_emplace(uf.find(v), number.size());
    comp[v] = it->second;
  }
  return comp;
}

std::size_t num_components(const Graph& g) {
  auto comp = component_of_vertices(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

int first_betti_number(const Graph& g) {
  return static_cast<int>(g.num_edges()) - static_cast<int>(g.num_vertices()) + static_cast<int>(num_components(g));
}

std::vector<std::size_t> cycle_edges(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unseen), low(n, 0);
  std::vector<char> bridge(g.num_edges(), 0);
  std::size_t clock = 0;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent_edge) {
    disc[v] = low[v] = clock++;
    for (std::size_t e : g.slots(v)) {
      if (e == parent_edge) continue;
      const auto& [a, b] = g.endpoints(e);
      std::size_t w = (a == v) ? b : a;
      if (disc[w] == unseen) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridge[e] = 1;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (disc[v] == unseen) dfs(v, unseen);

  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!bridge[e]) out.push_back(e);
  return out;
}

bool is_cycle_edge(const Graph& g, std::size_t e) {
  auto ce = cycle_edges(g);
  return std::binary_search(ce.begin(), ce.end(), e);
}

std::vector<std::size_t> cycle_legs(const Graph& g) {
  auto ce = cycle_edges(g);
  std::vector<char> cyc(g.num_edges(), 0);
  for (auto e : ce) cyc[e] = 1;
  std::vector<std::size_t> legs;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (cyc[e]) continue;
    bool touches = false;
    for (std::size_t v : g.endpoints(e))
      for (std::size_t f : g.slots(v)) touches = touches || cyc[f];
    if (touches) legs.push_back(e);
  }
  return legs;
}

std::vector<std::vector<std::size_t>> enumerate_cycles(const Graph& g) {
  const int betti = first_betti_number(g);
  if (betti > 24) throw std::invalid_argument("enumerate_cycles: first Betti number too large");
  const std::size_t m = g.num_edges();

  // Spanning forest by BFS; each non-forest edge closes one fundamental cycle.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(g.num_vertices(), none), depth(g.num_vertices(), 0);
  std::vector<char> seen(g.num_vertices(), 0), forest(m, 0);
  for (std::size_t root = 0; root < g.num_vertices(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t e : g.slots(v)) {
        const auto& [a, b] = g.endpoints(e);
        std::size_t w = (a == v) ? b : a;
        if (seen[w]) continue;
        seen[w] = 1;
        forest[e] = 1;
        parent_edge[w] = e;
        depth[w] = depth[v] + 1;
        q.push(w);
      }
    }
  }
  auto other = [&](std::size_t e, std::size_t v) {
    const auto& [a, b] = g.endpoints(e);
    return a == v ? b : a;
  };

  std::vector<std::vector<char>> basis;
  for (std::size_t e = 0; e < m; ++e) {
    if (forest[e]) continue;
    std::vector<char> mask(m, 0);
    mask[e] = 1;
    std::size_t a = g.endpoints(e)[0], b = g.endpoints(e)[1];
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      std::size_t pe = parent_edge[a];
      mask[pe] ^= 1;
      a = other(pe, a);
    }
    basis.push_back(std::move(mask));
  }

  std::vector<std::vector<std::size_t>> cycles;
  const std::size_t combos = std::size_t{1} << basis.size();
  for (std::size_t bits = 1; bits < combos; ++bits) {
    std::vector<char> mask(m, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (bits >> i & 1)
        for (std::size_t e = 0; e < m; ++e) mask[e] ^= basis[i][e];
    std::vector<std::size_t> set;
    for (std::size_t e = 0; e < m; ++e)
      if (mask[e]) set.push_back(e);
    UnionFind uf(g.num_vertices());
    for (auto e : set) uf.unite(g.endpoints(e)[0], g.endpoints(e)[1]);
    std::size_t r = uf.find(g.endpoints(set.front())[0]);
    bool connected = std::all_of(set.begin(), set.end(), [&](std::size_t e) { return uf.find(g.endpoints(e)[0]) == r; });
    if (connected) cycles.push_back(std::move(set));
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return cycles;
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> edges) {
  std::vector<Edge> out;
  for (auto e : edges) out.push_back(g.edge(e));
  return Graph(std::move(out), g.name());
}

std::vector<Graph> components(const Graph& g) {
  auto comp = component_of_vertices(g);
  std::map<std::size_t, std::vector<std::size_t>> by_comp;
  std::vector<std::size_t> order;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::size_t c = comp[g.endpoints(e)[0]];
    if (!by_comp.contains(c)) order.push_back(c);
    by_comp[c].push_back(e);
  }
  std::vector<Graph> out;
  for (auto c : order) out.push_back(induced_subgraph(g, by_comp[c]));
  return out;
}

// ---------------------------------------------------------------------------

CutResult cut_edge(const Graph& g, std::string_view id) {
  std::size_t e = g.edge_index(id);
  if (g.is_leaf_edge(e)) throw std::invalid_argument("cut_edge: '" + std::string(id) + "' is a leaf edge");
  const Edge& old = g.edge(e);

  auto edge_ids = g.edge_ids();
  std::string first = fresh_name(old.id + "'", edge_ids);
  edge_ids.push_back(first);
  std::string second = fresh_name(old.id + "''", edge_ids);

  auto vertices = g.vertices();
  std::string leaf1 = fresh_name(old.id + "'", vertices);
  vertices.push_back(leaf1);
  std::string leaf2 = fresh_name(old.id + "''", vertices);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (i != e) edges.push_back(g.edge(i));
  edges.push_back({first, old.u, leaf1});
  edges.push_back({second, old.v, leaf2});
  return {Graph(std::move(edges), g.name()), {first, second}};
}

AssociatedTree associated_tree(const Graph& g) {
  AssociatedTree out{g, {}, {}};
  for (const auto& e : g.edges()) out.origin[e.id] = e.id;
  while (true) {
    auto ce = cycle_edges(out.tree);
    if (ce.empty()) break;
    std::string id = out.tree.edge(ce.back()).id;
    CutResult cut = cut_edge(out.tree, id);
    std::string source = out.origin.at(id);
    out.origin.erase(id);
    out.origin[cut.new_leaves[0]] = source;
    out.origin[cut.new_leaves[1]] = source;
    out.pairs.push_back(cut.new_leaves);
    out.tree = std::move(cut.graph);
  }
  return out;
}

Graph reglue(const AssociatedTree& t, std::string name) {
  std::set<std::string> paired;
  std::vector<Edge> edges;
  for (const auto& [first, second] : t.pairs) {
    const Edge& a = t.tree.edge(t.tree.edge_index(first));
    const Edge& b = t.tree.edge(t.tree.edge_index(second));
    edges.push_back({t.origin.at(first), a.u, b.u});
    paired.insert(first);
    paired.insert(second);
  }
  for (const auto& e : t.tree.edges())
    if (!paired.contains(e.id)) edges.push_back({t.origin.at(e.id), e.u, e.v});
  return Graph(std::move(edges), std::move(name));
}

// ---------------------------------------------------------------------------

Suppressed suppress_degree2(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::map<std::string, std::vector<std::string>> prov;
  for (const auto& e : edges) prov[e.id] = {e.id};

  while (true) {
    Graph cur(edges, g.name());
    std::optional<std::size_t> target;
    for (std::size_t v = 0; v < cur.num_vertices() && !target; ++v) {
      auto s = cur.slots(v);
      if (s.size() == 2 && s[0] != s[1]) target = v;
    }
    if (!target) return {std::move(cur), std::move(prov)};

    std::size_t v = *target;
    std::size_t e1 = cur.slots(v)[0], e2 = cur.slots(v)[1];
    const Edge& a = cur.edge(e1);
    const Edge& b = cur.edge(e2);
    const std::string& vname = cur.vertex(v);
    std::string x = (a.u == vname) ? a.v : a.u;
    std::string y = (b.u == vname) ? b.v : b.u;
    Edge merged{a.id, x, y};

    auto& keep = prov[a.id];
    auto& gone = prov[b.id];
    keep.insert(keep.end(), gone.begin(), gone.end());
    std::sort(keep.begin(), keep.end());
    prov.erase(b.id);

    std::vector<Edge> next;
    for (std::size_t i = 0; i < cur.num_edges(); ++i)
      if (i != e1 && i != e2) next.push_back(cur.edge(i));
    next.push_back(std::move(merged));
    edges = std::move(next);
  }
}

namespace {

std::set<std::string> leg_ids(const Graph& g) {
  std::set<std::string> out;
  for (auto e : cycle_legs(g)) out.insert(g.edge(e).id);
  return out;
}

// Moves the end slots `moved` (positions in g.slots(v)) of vertex v onto a new
// vertex joined to v by a new edge.
Graph split_vertex(const Graph& g, std::size_t v, std::array<std::size_t, 2> moved, const std::string& new_vertex,
                   const std::string& new_edge) {
  auto slots = g.slots(v);
  const std::string& name = g.vertex(v);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t pos : moved) {
    std::size_t e = slots[pos];
    Edge& edge = edges[e];
    if (g.edge(e).is_loop()) {
      // A loop occupies two adjacent slots; the first belongs to its u end.
      if (pos == 0 || slots[pos - 1] != e)
        edge.u = new_vertex;
      else
        edge.v = new_vertex;
    } else if (edge.u == name) {
      edge.u = new_vertex;
    } else {
      edge.v = new_vertex;
    }
  }
  edges.push_back({new_edge, new_vertex, name});
  return Graph(std::move(edges), g.name());
}

}  // namespace

Refinement trivalent_refinement(const Graph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) == 2) throw std::invalid_argument("trivalent_refinement: vertex '" + g.vertex(v) + "' has valence 2");

  Refinement out{g, {}};
  while (true) {
    const Graph& cur = out.graph;
    std::optional<std::size_t> target;
    for (std::size_t v = 0; v < cur.num_vertices() && !target; ++v)
      if (cur.valence(v) > 3) target = v;
    if (!target) return out;

    std::size_t v = *target;
    auto slots = cur.slots(v);
    auto ce = cycle_edges(cur);
    auto on_cycle = [&](std::size_t pos) { return std::binary_search(ce.begin(), ce.end(), slots[pos]); };

    std::vector<std::array<std::size_t, 2>> candidates[4];
    for (std::size_t i = 0; i < slots.size(); ++i)
      for (std::size_t j = i + 1; j < slots.size(); ++j) {
        bool ci = on_cycle(i), cj = on_cycle(j);
        int group = 3;
        if (ci != cj)
          group = 0;
        else if (ci && slots[i] != slots[j])
          group = 1;
        else if (ci)
          group = 2;
        candidates[group].push_back({i, j});
      }

    auto vertices = cur.vertices();
    std::string vname = fresh_name(cur.vertex(v) + "'", vertices);
    std::string ename = fresh_name("_" + cur.vertex(v) + "'", cur.edge_ids());
    bool any_cycle = false;
    for (std::size_t i = 0; i < slots.size(); ++i) any_cycle = any_cycle || on_cycle(i);

    std::optional<Graph> chosen;
    if (any_cycle) {
      auto old_legs = leg_ids(cur);
      for (const auto& group : candidates) {
        for (const auto& pair : group) {
          Graph next = split_vertex(cur, v, pair, vname, ename);
          if (!is_cycle_edge(next, next.edge_index(ename))) continue;
          auto legs = leg_ids(next);
          if (std::includes(old_legs.begin(), old_legs.end(), legs.begin(), legs.end())) {
            chosen = std::move(next);
            break;
          }
        }
        if (chosen) break;
      }
    }
    if (!chosen) chosen = split_vertex(cur, v, {0, 1}, vname, ename);
    out.graph = std::move(*chosen);
    out.new_edges.push_back(ename);
  }
}

PolygonCore multiple_polygon_core(const Graph& g) {
  if (first_betti_number(g) < 1) throw std::invalid_argument("multiple_polygon_core: graph is a forest");

  auto ce = cycle_edges(g);
  struct Candidate {
    std::string id;
    std::set<std::string> tree_side;
  };
  std::vector<Candidate> candidates;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.is_leaf_edge(e) || std::binary_search(ce.begin(), ce.end(), e)) continue;
    CutResult cut = cut_edge(g, g.edge(e).id);
    auto comp = component_of_vertices(cut.graph);
    std::array<std::size_t, 2> side;
    for (int s = 0; s < 2; ++s) {
      std::size_t leaf = cut.graph.edge_index(cut.new_leaves[s]);
      side[s] = comp[cut.graph.endpoints(leaf)[0]];
    }
    std::array<std::vector<std::size_t>, 2> side_edges;
    for (std::size_t f = 0; f < cut.graph.num_edges(); ++f)
      for (int s = 0; s < 2; ++s)
        if (comp[cut.graph.endpoints(f)[0]] == side[s]) side_edges[s].push_back(f);
    std::array<int, 2> betti;
    for (int s = 0; s < 2; ++s) betti[s] = first_betti_number(induced_subgraph(cut.graph, side_edges[s]));
    for (int s = 0; s < 2; ++s) {
      if (betti[s] == 0 && betti[1 - s] > 0 && side_edges[s].size() > 1) {
        Candidate c{g.edge(e).id, {}};
        for (auto f : side_edges[s]) {
          const std::string& fid = cut.graph.edge(f).id;
          if (fid != cut.new_leaves[s]) c.tree_side.insert(fid);
        }
        candidates.push_back(std::move(c));
      }
    }
  }

  PolygonCore out;
  for (const auto& c : candidates) {
    bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                 [&](const Candidate& o) { return o.tree_side.contains(c.id); });
    if (!dominated) out.cut_edges.push_back(c.id);
  }
  std::sort(out.cut_edges.begin(), out.cut_edges.end());

  Graph cur = g;
  for (const auto& id : out.cut_edges) cur = cut_edge(cur, id).graph;

  std::vector<Edge> core_edges;
  for (Graph& part : components(cur)) {
    if (first_betti_number(part) > 0)
      core_edges.insert(core_edges.end(), part.edges().begin(), part.edges().end());
    else
      out.trees.push_back(std::move(part));
  }
  out.core = Graph(std::move(core_edges), g.name());
  return out;
}

CycleLayout cycle_layout(const Graph& g) {
  if (first_betti_number(g) != 1) throw std::invalid_argument("cycle_layout: first Betti number must be 1");
  auto ce = cycle_edges(g);
  std::vector<char> cyc(g.num_edges(), 0);
  for (auto e : ce) cyc[e] = 1;

  std::size_t start = g.endpoints(ce.front())[0];
  for (auto e : ce) start = std::min({start, g.endpoints(e)[0], g.endpoints(e)[1]});

  CycleLayout out;
  std::size_t v = start;
  std::size_t prev = static_cast<std::size_t>(-1);
  do {
    out.vertices.push_back(v);
    std::vector<std::size_t> legs;
    std::optional<std::size_t> next;
    for (std::size_t f : g.slots(v)) {
      if (!cyc[f])
        legs.push_back(f);
      else if (f != prev && !next)
        next = f;
    }
    if (!next) throw std::logic_error("cycle_layout: broken cycle");
    out.legs.push_back(std::move(legs));
    out.edges.push_back(*next);
    const auto& [a, b] = g.endpoints(*next);
    prev = *next;
    v = (a == v) ? b : a;
  } while (v != start);
  return out;
}

}  // namespace phylosemi
