#include "phylosemi/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "scan.hpp"

namespace phylosemi {

bool is_indecomposable(const Graph& g, const Labeling& w) {
  if (!is_member(g, w)) throw std::invalid_argument("is_indecomposable: not a member");
  const int d = w.degree;
  if (d < 1) throw std::invalid_argument("is_indecomposable: degree 0");

  detail::Scanner scan(g);
  std::vector<int> lo(g.num_edges()), hi(g.num_edges());
  std::vector<int> rest;
  // A splitting w = u + (w − u) can always be written with deg u <= deg w / 2.
  for (int k = 1; 2 * k <= d; ++k) {
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      lo[e] = std::max(0, w[e] - (d - k));
      hi[e] = std::min(w[e], k);
    }
    auto ok = [&](std::size_t v, std::span<const int> u) {
      if (!vertex_condition(u, k)) return false;
      rest.clear();
      auto s = g.slots(v);
      for (std::size_t i = 0; i < s.size(); ++i) rest.push_back(w[s[i]] - u[i]);
      return vertex_condition(rest, d - k);
    };
    bool finished = scan.run(lo, hi, ok, [](const std::vector<int>&) { return false; });
    if (!finished) return false;
  }
  return true;
}

namespace {

bool nonnegative_difference(const Labeling& w, const Labeling& u) {
  for (std::size_t e = 0; e < w.labels.size(); ++e)
    if (w[e] < u[e]) return false;
  return true;
}

}  // namespace

GeneratorReport minimal_generators(const Graph& g, int cap) {
  if (cap < 1) throw std::invalid_argument("minimal_generators: cap must be at least 1");
  GeneratorReport report;
  report.cap_used = cap;
  for (int d = 1; d <= cap; ++d) {
    const std::size_t known = report.generators.size();
    for (Labeling& w : enumerate_degree(g, d)) {
      bool decomposable = false;
      if (d > 1) {
        for (std::size_t i = 0; i < known && !decomposable; ++i) {
          const Labeling& u = report.generators[i];
          decomposable = nonnegative_difference(w, u) && is_member(g, w - u);
        }
      }
      if (!decomposable) report.generators.push_back(std::move(w));
    }
    int found = static_cast<int>(report.generators.size() - known);
    if (found > 0) {
      report.per_degree_counts[d] = found;
      report.max_degree = d;
    }
  }
  report.cap_hit = report.max_degree == cap;
  return report;
}

MaxDegree max_generator_degree(const Graph& g, int cap) {
  GeneratorReport r = minimal_generators(g, cap);
  return {r.max_degree, r.cap_hit};
}

int default_cap(const Graph& g) { return first_betti_number(g) + 1; }

}  // namespace phylosemi
