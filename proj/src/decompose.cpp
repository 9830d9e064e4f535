#include "phylosemi/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "phylosemi/generators.hpp"

namespace phylosemi {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool fits_under(const Labeling& u, const Labeling& w) {
  for (std::size_t e = 0; e < w.labels.size(); ++e)
    if (u[e] > w[e]) return false;
  return true;
}

std::string graph_key(const Graph& g) {
  std::string key;
  for (const auto& e : g.edges()) key += e.id + ':' + e.u + '-' + e.v + ';';
  return key;
}

struct Context {
  int cap;
  std::map<std::string, GeneratorReport> generators;
  std::map<std::pair<std::string, Labeling>, std::vector<Labeling>> memo;

  const std::vector<Labeling>& generators_upto(const Graph& g, const std::string& key, int k) {
    auto it = generators.find(key);
    if (it == generators.end() || it->second.cap_used < k) it = generators.insert_or_assign(key, minimal_generators(g, k)).first;
    return it->second.generators;
  }
};

std::vector<Labeling> full(const Graph& g, const Labeling& w, Context& ctx);
std::optional<std::vector<Labeling>> lift(const Graph& g, const Labeling& w, std::size_t e, Context& ctx);

// Labeling of `target` with the given degree, read off several (graph, labeling)
// parts by edge id and summed. Entries of `fixed` overwrite by id.
Labeling assemble(const Graph& target, int degree, const std::vector<std::pair<const Graph*, Labeling>>& parts,
                  const std::map<std::string, int>& fixed) {
  Labeling out = Labeling::zero(target, degree);
  for (const auto& [graph, part] : parts)
    for (std::size_t i = 0; i < graph->num_edges(); ++i)
      if (auto e = target.find_edge(graph->edge(i).id)) out[*e] += part[i];
  for (const auto& [id, value] : fixed) out[target.edge_index(id)] = value;
  return out;
}

struct Piece {
  Labeling labeling;
  int cut;  // label on the cut end
};

// Groups two piece lists so that each group has equal total degree and equal
// total cut label on both sides. Returns index groups into xs and ys.
std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> match_pieces(const std::vector<Piece>& xs,
                                                                                       const std::vector<Piece>& ys) {
  auto order = [](const std::vector<Piece>& ps) {
    std::vector<std::size_t> idx(ps.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      // Sort by cut fraction, then degree.
      long long l = 1LL * ps[a].cut * ps[b].labeling.degree, r = 1LL * ps[b].cut * ps[a].labeling.degree;
      if (l != r) return l < r;
      return ps[a].labeling.degree < ps[b].labeling.degree;
    });
    return idx;
  };
  auto xo = order(xs), yo = order(ys);
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> cur;
  int dx = 0, cx = 0, dy = 0, cy = 0;
  std::size_t i = 0, j = 0;
  while (i < xo.size() || j < yo.size()) {
    if (j >= yo.size() || (i < xo.size() && dx <= dy)) {
      cur.first.push_back(xo[i]);
      dx += xs[xo[i]].labeling.degree;
      cx += xs[xo[i]].cut;
      ++i;
    } else {
      cur.second.push_back(yo[j]);
      dy += ys[yo[j]].labeling.degree;
      cy += ys[yo[j]].cut;
      ++j;
    }
    if (dx == dy && cx == cy && dx > 0) {
      groups.push_back(std::move(cur));
      cur = {};
      dx = cx = dy = cy = 0;
    }
  }
  if (!cur.first.empty() || !cur.second.empty()) {
    if (groups.empty()) return {};
    // Leftovers join the last closed group.
    auto& last = groups.back();
    last.first.insert(last.first.end(), cur.first.begin(), cur.first.end());
    last.second.insert(last.second.end(), cur.second.begin(), cur.second.end());
  }
  return groups;
}

std::optional<std::vector<Labeling>> lift_bridge(const Graph& g, const Labeling& w, std::size_t e, Context& ctx) {
  const std::string id = g.edge(e).id;
  CutResult cut = cut_edge(g, id);
  const Graph& gbar = cut.graph;
  Labeling wbar = Labeling::zero(gbar, w.degree);
  for (std::size_t i = 0; i < gbar.num_edges(); ++i) {
    const std::string& fid = gbar.edge(i).id;
    wbar[i] = (fid == cut.new_leaves[0] || fid == cut.new_leaves[1]) ? w[e] : w[g.edge_index(fid)];
  }

  // Side Y holds e'', side X everything else.
  auto comp = component_of_vertices(gbar);
  std::size_t y_comp = comp[gbar.endpoints(gbar.edge_index(cut.new_leaves[1]))[0]];
  std::vector<std::size_t> x_edges, y_edges;
  for (std::size_t i = 0; i < gbar.num_edges(); ++i)
    (comp[gbar.endpoints(i)[0]] == y_comp ? y_edges : x_edges).push_back(i);
  Graph x = induced_subgraph(gbar, x_edges), y = induced_subgraph(gbar, y_edges);
  Labeling wx = restrict_to(gbar, wbar, x), wy = restrict_to(gbar, wbar, y);
  std::size_t x_cut = x.edge_index(cut.new_leaves[0]), y_cut = y.edge_index(cut.new_leaves[1]);

  auto pieces_of = [&](const Graph& side, const Labeling& ws, std::size_t at) {
    std::vector<Piece> out;
    for (auto& p : full(side, ws, ctx)) out.push_back({p, p[at]});
    return out;
  };
  std::vector<Piece> xs = pieces_of(x, wx, x_cut), ys = pieces_of(y, wy, y_cut);

  std::vector<Labeling> lifted;
  auto glue = [&](const std::vector<std::size_t>& xi, const std::vector<std::size_t>& yi) {
    int degree = 0, label = 0;
    std::vector<std::pair<const Graph*, Labeling>> parts;
    for (auto i : xi) {
      degree += xs[i].labeling.degree;
      label += xs[i].cut;
      parts.emplace_back(&x, xs[i].labeling);
    }
    for (auto i : yi) parts.emplace_back(&y, ys[i].labeling);
    lifted.push_back(assemble(g, degree, parts, {{id, label}}));
  };

  bool x_tree = first_betti_number(x) == 0, y_tree = first_betti_number(y) == 0;
  if (x_tree || y_tree) {
    // Networks on the tree side can be dealt out to match any piece on the other side.
    const auto& fixed = y_tree ? xs : ys;
    const auto& nets = y_tree ? ys : xs;
    std::vector<std::size_t> ones, zeros;
    for (std::size_t i = 0; i < nets.size(); ++i) (nets[i].cut ? ones : zeros).push_back(i);
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      std::vector<std::size_t> dealt;
      for (int k = 0; k < fixed[i].labeling.degree; ++k) {
        auto& pool = k < fixed[i].cut ? ones : zeros;
        if (pool.empty()) throw std::logic_error("cut_and_lift: network pool exhausted");
        dealt.push_back(pool.back());
        pool.pop_back();
      }
      if (y_tree)
        glue({i}, dealt);
      else
        glue(dealt, {i});
    }
  } else {
    for (const auto& [xi, yi] : match_pieces(xs, ys)) glue(xi, yi);
  }
  if (lifted.size() < 2) return std::nullopt;
  return lifted;
}

std::optional<std::vector<Labeling>> lift_cycle_edge(const Graph& g, const Labeling& w, std::size_t e, Context& ctx) {
  const std::string id = g.edge(e).id;
  CutResult cut = cut_edge(g, id);
  const Graph& gbar = cut.graph;
  Labeling wbar = Labeling::zero(gbar, w.degree);
  for (std::size_t i = 0; i < gbar.num_edges(); ++i) {
    const std::string& fid = gbar.edge(i).id;
    wbar[i] = (fid == cut.new_leaves[0] || fid == cut.new_leaves[1]) ? w[e] : w[g.edge_index(fid)];
  }
  std::size_t e1 = gbar.edge_index(cut.new_leaves[0]), e2 = gbar.edge_index(cut.new_leaves[1]);

  std::vector<Labeling> groups;
  std::vector<Labeling> open;
  for (auto& p : full(gbar, wbar, ctx)) {
    if (p[e1] == p[e2]) {
      groups.push_back(std::move(p));
      continue;
    }
    // Pair with an earlier piece whose mismatch cancels this one.
    auto it = std::find_if(open.begin(), open.end(),
                           [&](const Labeling& q) { return q[e1] - q[e2] == p[e2] - p[e1]; });
    if (it != open.end()) {
      groups.push_back(*it + p);
      open.erase(it);
    } else {
      open.push_back(std::move(p));
    }
  }
  if (!open.empty()) {
    Labeling rest = open.front();
    for (std::size_t i = 1; i < open.size(); ++i) rest += open[i];
    groups.push_back(std::move(rest));
  }
  if (groups.size() < 2) return std::nullopt;

  std::vector<Labeling> lifted;
  for (const auto& p : groups) lifted.push_back(assemble(g, p.degree, {{&gbar, p}}, {{id, p[e1]}}));
  return lifted;
}

std::optional<std::vector<Labeling>> lift(const Graph& g, const Labeling& w, std::size_t e, Context& ctx) {
  if (g.is_leaf_edge(e) || w.degree < 2) return std::nullopt;
  std::optional<std::vector<Labeling>> out;
  try {
    out = is_cycle_edge(g, e) ? lift_cycle_edge(g, w, e, ctx) : lift_bridge(g, w, e, ctx);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  if (out) {
    for (const auto& p : *out)
      if (!is_member(g, p)) throw std::logic_error("cut_and_lift: lifted piece " + to_string(p) + " is not a member");
    std::sort(out->begin(), out->end());
  }
  return out;
}

std::vector<Labeling> full(const Graph& g, const Labeling& w, Context& ctx) {
  const int d = w.degree;
  if (d == 0) return {};
  if (d == 1) return {w};
  if (first_betti_number(g) == 0) return decompose_tree_networks(g, w);

  const std::string key = graph_key(g);
  auto memo = ctx.memo.find({key, w});
  if (memo != ctx.memo.end()) return memo->second;

  std::vector<Labeling> result;
  for (std::size_t e = 0; e < g.num_edges() && result.empty(); ++e) {
    if (auto pieces = lift(g, w, e, ctx)) {
      for (const auto& p : *pieces) {
        auto sub = full(g, p, ctx);
        result.insert(result.end(), sub.begin(), sub.end());
      }
    }
  }
  if (result.empty()) {
    const int top = std::min(d - 1, ctx.cap);
    const auto& gens = ctx.generators_upto(g, key, top);
    for (const auto& u : gens) {
      if (u.degree >= d) break;
      if (!fits_under(u, w)) continue;
      Labeling rest = w - u;
      if (!is_member(g, rest)) continue;
      result = full(g, rest, ctx);
      result.push_back(u);
      break;
    }
  }
  if (result.empty()) {
    if (d - 1 > ctx.cap)
      throw std::runtime_error("decompose: degree " + std::to_string(d) + " exceeds cap " + std::to_string(ctx.cap) +
                               " and no generator up to the cap splits off");
    result.push_back(w);
  }
  std::sort(result.begin(), result.end());
  ctx.memo.emplace(std::make_pair(key, w), result);
  return result;
}

}  // namespace

std::vector<Labeling> decompose_tree_networks(const Graph& t, const Labeling& w) {
  require(first_betti_number(t) == 0, "decompose_tree_networks: graph has cycles");
  require(is_member(t, w), "decompose_tree_networks: not a member");
  const auto nets = enumerate_networks(t);
  std::vector<Labeling> chosen;

  std::function<bool(std::size_t, const Labeling&)> search = [&](std::size_t start, const Labeling& rest) {
    if (rest.degree == 0) return true;
    for (std::size_t i = start; i < nets.size(); ++i) {
      if (!fits_under(nets[i], rest)) continue;
      Labeling next = rest - nets[i];
      if (!is_member(t, next)) continue;
      chosen.push_back(nets[i]);
      if (search(i, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0, w)) throw std::logic_error("decompose_tree_networks: member " + to_string(w) + " has no decomposition");
  return chosen;
}

std::optional<std::vector<Labeling>> cut_and_lift(const Graph& g, const Labeling& w, std::string_view e, int cap) {
  require(is_member(g, w), "cut_and_lift: not a member");
  Context ctx{cap, {}, {}};
  return lift(g, w, g.edge_index(e), ctx);
}

std::vector<Labeling> decompose_full(const Graph& g, const Labeling& w, int cap) {
  require(is_member(g, w), "decompose_full: not a member");
  require(cap >= 1, "decompose_full: cap must be at least 1");
  Context ctx{cap, {}, {}};
  return full(g, w, ctx);
}

std::pair<Labeling, Labeling> branch_swap(const Graph& t, const Labeling& w1, const Labeling& w2, std::string_view v) {
  require(first_betti_number(t) == 0, "branch_swap: graph has cycles");
  std::size_t vi = t.vertex_index(v);
  require(t.valence(vi) == 3, "branch_swap: vertex is not trivalent");
  for (const auto* w : {&w1, &w2})
    require(w->degree == 1 && is_member(t, *w), "branch_swap: inputs must be networks");

  auto slots = t.slots(vi);
  auto match = std::find_if(slots.begin(), slots.end(), [&](std::size_t e) { return w1[e] == w2[e]; });
  if (match == slots.end()) throw std::logic_error("branch_swap: no end slot where the networks agree");

  // Collect the branch: everything reachable through the matched edge.
  std::vector<char> in_branch(t.num_edges(), 0), seen(t.num_vertices(), 0);
  seen[vi] = 1;
  std::vector<std::size_t> stack{*match};
  in_branch[*match] = 1;
  while (!stack.empty()) {
    std::size_t e = stack.back();
    stack.pop_back();
    for (std::size_t u : t.endpoints(e)) {
      if (seen[u]) continue;
      seen[u] = 1;
      for (std::size_t f : t.slots(u))
        if (!in_branch[f]) {
          in_branch[f] = 1;
          stack.push_back(f);
        }
    }
  }
  Labeling a = w1, b = w2;
  for (std::size_t e = 0; e < t.num_edges(); ++e)
    if (in_branch[e]) std::swap(a[e], b[e]);
  return {a, b};
}

Deg3Split split_deg3(const Graph& g, const Labeling& w) {
  auto witness = deg3_polygon_characterize(g, w);
  if (witness) return {{}, witness};
  auto nets = polygon_networks(g, w);
  if (!nets) throw std::logic_error("split_deg3: neither three networks nor a split");
  return {std::move(*nets), std::nullopt};
}

}  // namespace phylosemi
