#include "oracle.hpp"

#include <functional>
#include <stdexcept>

namespace oracle {

using phylosemi::Graph;
using phylosemi::Labeling;

MembershipOracle::MembershipOracle(const Graph& g) : g_(g), tree_(phylosemi::associated_tree(g)) {
  const Graph& t = tree_.tree;
  if (t.num_edges() > 63) throw std::invalid_argument("oracle: tree too large");
  for (const auto& e : t.edges()) source_.push_back(g.edge_index(tree_.origin.at(e.id)));

  const std::size_t m = t.num_edges();
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    bool even = true;
    for (std::size_t v = 0; v < t.num_vertices() && even; ++v) {
      if (t.valence(v) == 1) continue;
      int sum = 0;
      for (std::size_t e : t.slots(v)) sum += (mask >> e) & 1;
      even = sum % 2 == 0;
    }
    if (even) nets_.push_back(mask);
  }
}

bool MembershipOracle::operator()(const Labeling& w) const {
  if (w.labels.size() != g_.num_edges()) throw std::invalid_argument("oracle: wrong label count");
  if (w.degree < 0) throw std::invalid_argument("oracle: negative degree");
  std::vector<int> rest;
  for (std::size_t i = 0; i < source_.size(); ++i) rest.push_back(w[source_[i]]);
  for (int x : rest)
    if (x < 0 || x > w.degree) return false;
  return sum_of(w.degree, rest);
}

bool MembershipOracle::sum_of(int k, std::vector<int>& rest) const {
  if (k == 0) {
    for (int x : rest)
      if (x != 0) return false;
    return true;
  }
  auto key = std::make_pair(k, rest);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  unsigned long long must = 0, forbid = 0;
  for (std::size_t e = 0; e < rest.size(); ++e) {
    if (rest[e] == k) must |= 1ULL << e;
    if (rest[e] == 0) forbid |= 1ULL << e;
  }
  bool found = false;
  for (unsigned long long n : nets_) {
    if ((n & must) != must || (n & forbid) != 0) continue;
    for (std::size_t e = 0; e < rest.size(); ++e) rest[e] -= (n >> e) & 1;
    found = sum_of(k - 1, rest);
    for (std::size_t e = 0; e < rest.size(); ++e) rest[e] += (n >> e) & 1;
    if (found) break;
  }
  memo_.emplace(std::move(key), found);
  return found;
}

bool is_member_oracle(const Graph& g, const Labeling& w) { return MembershipOracle(g)(w); }

bool is_closed_trail(const Graph& g, const std::vector<std::size_t>& edges) {
  if (edges.empty()) return false;
  std::vector<int> deg(g.num_vertices(), 0);
  for (auto e : edges) {
    deg[g.endpoints(e)[0]]++;
    deg[g.endpoints(e)[1]]++;
  }
  for (int d : deg)
    if (d % 2) return false;
  // Connectivity of the chosen edges by repeated relaxation.
  std::vector<char> reached(g.num_vertices(), 0);
  reached[g.endpoints(edges[0])[0]] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto e : edges) {
      auto [a, b] = g.endpoints(e);
      if (reached[a] != reached[b]) {
        reached[a] = reached[b] = 1;
        changed = true;
      }
    }
  }
  for (auto e : edges)
    if (!reached[g.endpoints(e)[0]]) return false;
  return true;
}

bool decomposable_by_search(const Graph& g, const Labeling& w) {
  const std::size_t m = g.num_edges();
  Labeling u = Labeling::zero(g, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t e) -> bool {
    if (e == m) {
      Labeling v = w - u;
      return phylosemi::is_member(g, u) && phylosemi::is_member(g, v);
    }
    for (int x = 0; x <= std::min(w[e], u.degree); ++x) {
      u[e] = x;
      if (rec(e + 1)) return true;
    }
    u[e] = 0;
    return false;
  };
  for (int k = 1; 2 * k <= w.degree; ++k) {
    u = Labeling::zero(g, k);
    if (rec(0)) return true;
  }
  return false;
}

}  // namespace oracle
