#include "phylosemi/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "scan.hpp"

namespace phylosemi {

Labeling Labeling::from_map(const Graph& g, int degree, const std::map<std::string, int>& labels) {
  Labeling w = zero(g, degree);
  std::vector<char> seen(g.num_edges(), 0);
  for (const auto& [id, value] : labels) {
    auto e = g.find_edge(id);
    if (!e) throw std::invalid_argument("label for unknown edge '" + id + "'");
    w.labels[*e] = value;
    seen[*e] = 1;
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!seen[e]) throw std::invalid_argument("missing label for edge '" + g.edge(e).id + "'");
  return w;
}

std::map<std::string, int> Labeling::to_map(const Graph& g) const {
  std::map<std::string, int> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) out[g.edge(e).id] = labels.at(e);
  return out;
}

Labeling& Labeling::operator+=(const Labeling& o) {
  if (labels.size() != o.labels.size()) throw std::invalid_argument("labelings of different graphs");
  degree += o.degree;
  for (std::size_t e = 0; e < labels.size(); ++e) labels[e] += o.labels[e];
  return *this;
}

Labeling& Labeling::operator-=(const Labeling& o) {
  if (labels.size() != o.labels.size()) throw std::invalid_argument("labelings of different graphs");
  degree -= o.degree;
  for (std::size_t e = 0; e < labels.size(); ++e) labels[e] -= o.labels[e];
  return *this;
}

std::string to_string(const Labeling& w) {
  std::ostringstream os;
  os << '(' << w.degree << ';';
  for (std::size_t e = 0; e < w.labels.size(); ++e) os << (e ? "," : "") << w.labels[e];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

std::string violation_symbol(Violation v) {
  switch (v) {
    case Violation::none: return "";
    case Violation::negative: return "[+]";
    case Violation::box: return "[box]";
    case Violation::parity: return "[♥♥]";
    case Violation::triangle: return "[△]";
    case Violation::degree: return "[°]";
    case Violation::odd_subset: return "[odd-subset]";
  }
  return "";
}

std::string violation_name(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::negative: return "non-negativity";
    case Violation::box: return "label above degree";
    case Violation::parity: return "parity";
    case Violation::triangle: return "triangle inequality";
    case Violation::degree: return "degree inequality";
    case Violation::odd_subset: return "odd-subset inequality";
  }
  return "";
}

namespace {

// Largest Σ_S (2 t_i − d) over odd subsets S of the end slots.
long long best_odd_subset(std::span<const int> t, int d) {
  long long positive_sum = 0;
  int positives = 0;
  long long min_positive = std::numeric_limits<long long>::max();
  long long max_rest = std::numeric_limits<long long>::min();
  for (int x : t) {
    long long c = 2LL * x - d;
    if (c > 0) {
      positive_sum += c;
      ++positives;
      min_positive = std::min(min_positive, c);
    } else {
      max_rest = std::max(max_rest, c);
    }
  }
  if (positives % 2 == 1) return positive_sum;
  long long best = std::numeric_limits<long long>::min();
  if (positives > 0) best = positive_sum - min_positive;
  if (max_rest != std::numeric_limits<long long>::min()) best = std::max(best, positive_sum + max_rest);
  return best;
}

long long total(std::span<const int> t) {
  long long s = 0;
  for (int x : t) s += x;
  return s;
}

}  // namespace

bool vertex_condition(std::span<const int> t, int degree) {
  long long sum = total(t);
  if (sum % 2 != 0) return false;
  if (t.empty()) return true;
  return best_odd_subset(t, degree) <= sum - degree;
}

MembershipReport check_membership(const Graph& g, const Labeling& w) {
  if (w.labels.size() != g.num_edges())
    throw std::invalid_argument("labeling has " + std::to_string(w.labels.size()) + " labels, graph has " +
                                std::to_string(g.num_edges()) + " edges");
  if (w.degree < 0) throw std::invalid_argument("negative degree");

  auto fail = [](Violation v, std::string where, std::string detail) {
    return MembershipReport{false, v, std::move(where), std::move(detail)};
  };
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (w[e] < 0) return fail(Violation::negative, g.edge(e).id, "label " + std::to_string(w[e]) + " is negative");
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (w[e] > w.degree)
      return fail(Violation::box, g.edge(e).id,
                  "label " + std::to_string(w[e]) + " exceeds degree " + std::to_string(w.degree));
  }

  std::vector<int> t;
  for (std::size_t v : g.inner_vertices()) {
    t.clear();
    for (std::size_t f : g.slots(v)) t.push_back(w[f]);
    const std::string& name = g.vertex(v);
    long long sum = total(t);
    if (sum % 2 != 0) return fail(Violation::parity, name, "end-label sum " + std::to_string(sum) + " is odd");
    if (t.size() == 3) {
      for (int i = 0; i < 3; ++i) {
        if (t[i] > t[(i + 1) % 3] + t[(i + 2) % 3])
          return fail(Violation::triangle, name,
                      std::to_string(t[i]) + " > " + std::to_string(t[(i + 1) % 3]) + " + " +
                          std::to_string(t[(i + 2) % 3]));
      }
      if (sum > 2LL * w.degree)
        return fail(Violation::degree, name,
                    "local degree " + std::to_string(sum / 2) + " exceeds " + std::to_string(w.degree));
    } else if (best_odd_subset(t, w.degree) > sum - w.degree) {
      return fail(Violation::odd_subset, name, "an odd set of ends carries too much weight");
    }
  }
  return {};
}

bool is_member(const Graph& g, const Labeling& w) { return check_membership(g, w).member; }

// ---------------------------------------------------------------------------

LocalView local_view(const Graph& g, const Labeling& w, std::size_t v) {
  if (g.valence(v) != 3) throw std::invalid_argument("local_view: vertex '" + g.vertex(v) + "' is not trivalent");
  auto s = g.slots(v);
  return {w[s[0]], w[s[1]], w[s[2]]};
}

LocalView local_view(const Graph& g, const Labeling& w, std::string_view v) {
  return local_view(g, w, g.vertex_index(v));
}

LocalPaths local_paths(const LocalView& view) {
  const auto [a, b, c] = view;
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("local_paths: negative label");
  if ((a + b + c) % 2 != 0) throw std::invalid_argument("local_paths: odd end-label sum");
  if (a > b + c || b > a + c || c > a + b) throw std::invalid_argument("local_paths: triangle inequality fails");
  return {(b + c - a) / 2, (a + c - b) / 2, (a + b - c) / 2};
}

// ---------------------------------------------------------------------------

Restriction restrict(const Graph& g, const Labeling& w, std::span<const std::string> edge_ids) {
  std::vector<std::size_t> idx;
  for (const auto& id : edge_ids) idx.push_back(g.edge_index(id));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  Graph sub = induced_subgraph(g, idx);
  return {sub, restrict_to(g, w, sub)};
}

Labeling restrict_to(const Graph& from, const Labeling& w, const Graph& to) {
  Labeling out = Labeling::zero(to, w.degree);
  for (std::size_t e = 0; e < to.num_edges(); ++e) out[e] = w[from.edge_index(to.edge(e).id)];
  return out;
}

std::optional<Labeling> to_suppressed(const Graph& g, const Suppressed& s, const Labeling& w) {
  Labeling out = Labeling::zero(s.graph, w.degree);
  for (std::size_t e = 0; e < s.graph.num_edges(); ++e) {
    const auto& sources = s.provenance.at(s.graph.edge(e).id);
    int value = w[g.edge_index(sources.front())];
    for (const auto& id : sources)
      if (w[g.edge_index(id)] != value) return std::nullopt;
    out[e] = value;
  }
  return out;
}

Labeling from_suppressed(const Graph& g, const Suppressed& s, const Labeling& w) {
  Labeling out = Labeling::zero(g, w.degree);
  for (std::size_t e = 0; e < s.graph.num_edges(); ++e)
    for (const auto& id : s.provenance.at(s.graph.edge(e).id)) out[g.edge_index(id)] = w[e];
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Labeling> enumerate_degree(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("enumerate_degree: negative degree");
  std::vector<int> lo(g.num_edges(), 0), hi(g.num_edges(), d);
  std::vector<Labeling> out;
  detail::Scanner scan(g);
  scan.run(
      lo, hi, [d](std::size_t, std::span<const int> t) { return vertex_condition(t, d); },
      [&](const std::vector<int>& labels) {
        out.emplace_back(d, labels);
        return true;
      });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Labeling> enumerate_networks(const Graph& g) { return enumerate_degree(g, 1); }

// ---------------------------------------------------------------------------

detail::Scanner::Scanner(const Graph& g) : g_(g) {
  const std::size_t m = g.num_edges();
  const std::size_t n = g.num_vertices();
  std::vector<char> placed(m, 0), expanded(n, 0);
  std::vector<std::size_t> open(n);
  for (std::size_t v = 0; v < n; ++v) open[v] = g.valence(v);

  auto place = [&](std::size_t e) {
    placed[e] = 1;
    order_.push_back(e);
    const auto& [a, b] = g.endpoints(e);
    --open[a];
    --open[b];
  };
  while (order_.size() < m) {
    // Prefer the inner vertex closest to completion among those already touched.
    std::optional<std::size_t> pick;
    for (std::size_t v : g.inner_vertices()) {
      if (expanded[v] || open[v] == 0) continue;
      bool touched = open[v] < g.valence(v);
      if (!pick) {
        pick = v;
        continue;
      }
      bool pick_touched = open[*pick] < g.valence(*pick);
      if (touched != pick_touched ? touched : open[v] < open[*pick]) pick = v;
    }
    if (!pick) {
      for (std::size_t e = 0; e < m; ++e)
        if (!placed[e]) place(e);
      break;
    }
    expanded[*pick] = 1;
    for (std::size_t e : g.slots(*pick))
      if (!placed[e]) place(e);
  }

  ready_.resize(m);
  std::vector<std::size_t> position(m);
  for (std::size_t i = 0; i < m; ++i) position[order_[i]] = i;
  for (std::size_t v : g.inner_vertices()) {
    std::size_t last = 0;
    for (std::size_t e : g.slots(v)) last = std::max(last, position[e]);
    ready_[last].push_back(v);
  }
}

}  // namespace phylosemi
