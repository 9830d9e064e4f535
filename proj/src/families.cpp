#include "phylosemi/families.hpp"

#include <stdexcept>

namespace phylosemi {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string str(int i) { return std::to_string(i); }

// Triangle on vertices p0, p1, p2 with legs at p1 and p2; p0 is where it attaches.
void add_triangle(std::vector<Edge>& edges, const std::string& p) {
  edges.push_back({p + "0", p + "0", p + "1"});
  edges.push_back({p + "1", p + "1", p + "2"});
  edges.push_back({p + "2", p + "2", p + "0"});
  edges.push_back({"l" + p + "1", p + "1", "x" + p + "1"});
  edges.push_back({"l" + p + "2", p + "2", "x" + p + "2"});
}

}  // namespace

Graph theta() { return Graph({{"a", "u", "v"}, {"b", "u", "v"}, {"c", "u", "v"}}, "theta"); }

Graph polygon(int k) {
  require(k >= 1, "polygon: k must be at least 1");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({"c" + str(i), "v" + str(i), "v" + str((i + 1) % k)});
    edges.push_back({"l" + str(i), "v" + str(i), "x" + str(i)});
  }
  return Graph(std::move(edges), "polygon(" + str(k) + ")");
}

Graph bouquet(int g) {
  require(g >= 1, "bouquet: g must be at least 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= g; ++i) edges.push_back({"o" + str(i), "w", "w"});
  return Graph(std::move(edges), "bouquet(" + str(g) + ")");
}

Graph multi_edge(int g) {
  require(g >= 0, "multi_edge: g must be non-negative");
  std::vector<Edge> edges;
  for (int i = 0; i <= g; ++i) edges.push_back({"e" + str(i), "u", "v"});
  return Graph(std::move(edges), "multi_edge(" + str(g) + ")");
}

Graph caterpillar(int n) {
  require(n >= 1, "caterpillar: n must be at least 1");
  std::vector<Edge> edges;
  int leaf = 0;
  auto add_leaf = [&](int s) {
    ++leaf;
    edges.push_back({"l" + str(leaf), "s" + str(s), "x" + str(leaf)});
  };
  for (int s = 1; s <= n; ++s) {
    int spine = (s > 1) + (s < n);
    for (int i = spine; i < 3; ++i) add_leaf(s);
    if (s < n) edges.push_back({"p" + str(s), "s" + str(s), "s" + str(s + 1)});
  }
  return Graph(std::move(edges), "caterpillar(" + str(n) + ")");
}

Graph claw(int k) {
  require(k >= 1, "claw: k must be at least 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({"l" + str(i), "c", "x" + str(i)});
  return Graph(std::move(edges), "claw(" + str(k) + ")");
}

Graph dumbbell(int L) {
  require(L >= 0, "dumbbell: L must be non-negative");
  std::vector<Edge> edges;
  add_triangle(edges, "a");
  add_triangle(edges, "b");
  if (L == 0) {
    for (auto& e : edges) {
      if (e.u == "b0") e.u = "a0";
      if (e.v == "b0") e.v = "a0";
    }
  } else {
    auto node = [&](int i) { return i == 0 ? std::string("a0") : i == L ? std::string("b0") : "m" + str(i); };
    for (int i = 0; i < L; ++i) edges.push_back({"p" + str(i), node(i), node(i + 1)});
    for (int i = 1; i < L; ++i) edges.push_back({"q" + str(i), node(i), "y" + str(i)});
  }
  return Graph(std::move(edges), "dumbbell(" + str(L) + ")");
}

Graph shared_edge() {
  return Graph({{"m", "u", "v"},
                {"x1", "u", "p"},
                {"x2", "p", "v"},
                {"y1", "u", "q"},
                {"y2", "q", "v"},
                {"lp", "p", "xp"},
                {"lq", "q", "xq"}},
               "shared_edge");
}

Graph shared_vertex() { return dumbbell(0).renamed("shared_vertex"); }

Graph two_polygons(int k) {
  Graph one = polygon(k);
  std::vector<Edge> edges;
  for (const char* side : {"a", "b"})
    for (const auto& e : one.edges()) edges.push_back({side + e.id, side + e.u, side + e.v});
  return Graph(std::move(edges), "two_polygons(" + str(k) + ")");
}

Graph chain(int k) {
  require(k >= 2, "chain: k must be at least 2");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    edges.push_back({"o" + str(i), "v" + str(i), "v" + str(i)});
    if (i < k) edges.push_back({"p" + str(i), "v" + str(i), "v" + str(i + 1)});
  }
  return Graph(std::move(edges), "chain(" + str(k) + ")");
}

std::vector<std::string> family_names() {
  return {"bouquet", "caterpillar", "chain", "claw", "dumbbell", "multi_edge",
          "polygon", "shared_edge", "shared_vertex", "theta", "two_polygons"};
}

Graph family(std::string_view name, std::span<const int> params) {
  auto one = [&]() {
    require(params.size() == 1, std::string(name) + " takes exactly one parameter");
    return params[0];
  };
  auto none = [&]() { require(params.empty(), std::string(name) + " takes no parameters"); };
  if (name == "theta") return none(), theta();
  if (name == "shared_edge") return none(), shared_edge();
  if (name == "shared_vertex") return none(), shared_vertex();
  if (name == "polygon") return polygon(one());
  if (name == "bouquet") return bouquet(one());
  if (name == "multi_edge") return multi_edge(one());
  if (name == "caterpillar") return caterpillar(one());
  if (name == "claw") return claw(one());
  if (name == "dumbbell") return dumbbell(one());
  if (name == "two_polygons") return two_polygons(one());
  if (name == "chain") return chain(one());
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

}  // namespace phylosemi
