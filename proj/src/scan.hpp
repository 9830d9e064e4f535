#pragma once

#include <span>
#include <vector>

#include "phylosemi/graph.hpp"

namespace phylosemi::detail {

/// Depth-first walk over box-bounded labelings that checks each inner vertex
/// as soon as its last incident edge is assigned. Edges are visited in an
/// order that closes vertices early.
class Scanner {
 public:
  explicit Scanner(const Graph& g);

  /// Calls visit(labels) for every labeling with lo[e] <= x_e <= hi[e] that
  /// passes ok(v, end_labels) at every inner vertex v. visit returns false to
  /// stop; run then returns false.
  template <class Ok, class Visit>
  bool run(std::span<const int> lo, std::span<const int> hi, Ok&& ok, Visit&& visit) const {
    std::vector<int> labels(lo.begin(), lo.end());
    std::vector<int> ends;
    return step(0, labels, ends, lo, hi, ok, visit);
  }

  const Graph& graph() const { return g_; }

 private:
  template <class Ok, class Visit>
  bool step(std::size_t i, std::vector<int>& labels, std::vector<int>& ends, std::span<const int> lo,
            std::span<const int> hi, Ok& ok, Visit& visit) const {
    if (i == order_.size()) return visit(static_cast<const std::vector<int>&>(labels));
    const std::size_t e = order_[i];
    for (int x = lo[e]; x <= hi[e]; ++x) {
      labels[e] = x;
      bool good = true;
      for (std::size_t v : ready_[i]) {
        ends.clear();
        for (std::size_t f : g_.slots(v)) ends.push_back(labels[f]);
        if (!ok(v, std::span<const int>(ends))) {
          good = false;
          break;
        }
      }
      if (good && !step(i + 1, labels, ends, lo, hi, ok, visit)) return false;
    }
    labels[e] = lo[e];
    return true;
  }

  const Graph& g_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> ready_;
};

}  // namespace phylosemi::detail
