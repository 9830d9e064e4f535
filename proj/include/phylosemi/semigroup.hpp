#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phylosemi/graph.hpp"

namespace phylosemi {

/// Graded edge labeling (ω, deg ω). `labels` follows the canonical edge order
/// of the graph it belongs to. Ordering is by degree, then labels.
struct Labeling {
  int degree = 0;
  std::vector<int> labels;

  Labeling() = default;
  Labeling(int degree, std::vector<int> labels) : degree(degree), labels(std::move(labels)) {}

  static Labeling zero(const Graph& g, int degree) { return {degree, std::vector<int>(g.num_edges(), 0)}; }

  /// Builds from an edge-id map. Throws std::invalid_argument on a missing or
  /// unknown edge id.
  static Labeling from_map(const Graph& g, int degree, const std::map<std::string, int>& labels);
  std::map<std::string, int> to_map(const Graph& g) const;

  int operator[](std::size_t e) const { return labels[e]; }
  int& operator[](std::size_t e) { return labels[e]; }

  Labeling& operator+=(const Labeling& o);
  Labeling& operator-=(const Labeling& o);
  friend Labeling operator+(Labeling a, const Labeling& b) { return a += b; }
  friend Labeling operator-(Labeling a, const Labeling& b) { return a -= b; }

  auto operator<=>(const Labeling&) const = default;
};

/// Compact text form `(d; l0,l1,...)` in canonical edge order.
std::string to_string(const Labeling& w);

// ---------------------------------------------------------------------------
// Membership

enum class Violation {
  none,
  negative,   // [+]
  box,        // some label exceeds the degree
  parity,     // [♥♥]
  triangle,   // [△]
  degree,     // [°]
  odd_subset  // general-valence facet
};

/// Short bracketed symbol used in reports, e.g. "[♥♥]".
std::string violation_symbol(Violation v);
std::string violation_name(Violation v);

struct MembershipReport {
  bool member = true;
  Violation violation = Violation::none;
  /// Offending vertex or edge name, when there is one.
  std::string where;
  std::string detail;
};

/// Checks ω against the local conditions at every inner vertex:
///   labels in [0, deg ω]; even end-sum; and for every odd set S of end slots
///   Σ_S t − Σ_{S^c} t ≤ (|S| − 1)·deg ω.
/// Throws std::invalid_argument on a size mismatch or negative degree.
MembershipReport check_membership(const Graph& g, const Labeling& w);
bool is_member(const Graph& g, const Labeling& w);

/// Local test at one vertex with end labels `t` (a loop listed twice).
bool vertex_condition(std::span<const int> t, int degree);

// ---------------------------------------------------------------------------
// Local structure at a trivalent vertex

struct LocalView {
  int a = 0, b = 0, c = 0;
  friend bool operator==(const LocalView&, const LocalView&) = default;
};

struct LocalPaths {
  int x = 0, y = 0, z = 0;
  friend bool operator==(const LocalPaths&, const LocalPaths&) = default;
};

/// End labels at trivalent vertex v in slot order. Throws on other valences.
LocalView local_view(const Graph& g, const Labeling& w, std::size_t v);
LocalView local_view(const Graph& g, const Labeling& w, std::string_view v);

/// Solves a = y+z, b = x+z, c = x+y. Throws on odd sum or a triangle violation.
LocalPaths local_paths(const LocalView& view);

// ---------------------------------------------------------------------------
// Restriction and transport

struct Restriction {
  Graph graph;
  Labeling labeling;
};

/// Keeps the named edges. Throws std::invalid_argument on unknown ids.
Restriction restrict(const Graph& g, const Labeling& w, std::span<const std::string> edge_ids);

/// Reads the labels of `to`'s edges from a labeling of `from` by edge id.
Labeling restrict_to(const Graph& from, const Labeling& w, const Graph& to);

/// Moves a labeling of the source graph onto the suppressed graph. Empty when
/// the labels along a merged chain disagree.
std::optional<Labeling> to_suppressed(const Graph& g, const Suppressed& s, const Labeling& w);
/// Copies each suppressed edge's label back onto every edge it replaced.
Labeling from_suppressed(const Graph& g, const Suppressed& s, const Labeling& w);

// ---------------------------------------------------------------------------
// Enumeration

/// Every member of degree d, sorted.
std::vector<Labeling> enumerate_degree(const Graph& g, int d);

/// Degree-one members: 0/1 labelings with even end-sum at each inner vertex.
std::vector<Labeling> enumerate_networks(const Graph& g);

}  // namespace phylosemi
