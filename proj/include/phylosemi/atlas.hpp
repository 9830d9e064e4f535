#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace phylosemi {

/// One measured family member.
struct AtlasRow {
  std::string family;
  int param = 0;
  int betti = 0;
  int edges = 0;
  int max_degree = 0;
  bool cap_hit = false;
  double wall_ms = 0;
};

/// Fixed column order: family,params,betti,edges,max_degree,cap_hit,wall_ms
std::string atlas_header();
std::string atlas_csv(const AtlasRow& row);

/// Builds family(name, {param}) and measures its maximal generator degree.
/// An empty cap means first Betti number + 1.
AtlasRow atlas_row(const std::string& family, int param, std::optional<int> cap);

/// Computes rows for params a..b on up to `threads` workers; `emit` sees rows
/// in parameter order as soon as each prefix is complete. Params listed in
/// `skip` are not computed.
void run_atlas(const std::string& family, int a, int b, std::optional<int> cap, unsigned threads,
               const std::vector<int>& skip, const std::function<void(const AtlasRow&)>& emit);

}  // namespace phylosemi
