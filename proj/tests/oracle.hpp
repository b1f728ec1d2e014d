#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "isotool/graph.hpp"

namespace testutil {

// Independent isomorphism oracle: enumerates all node_count! bijections with
// std::next_permutation and checks each one directly. Exponential on
// purpose; keep n small.
inline bool brute_force_isomorphic(const iso::Graph& g1, const iso::Graph& g2,
                                   iso::IsoMode mode) {
  using iso::VertexId;
  const std::uint32_t n = g1.node_count();
  if (g2.node_count() != n) return false;
  if (g1.edge_count() != g2.edge_count()) return false;

  std::vector<VertexId> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 0);
  do {
    bool ok = true;
    if (mode != iso::IsoMode::Topology) {
      for (VertexId v = 0; v < n && ok; ++v) {
        ok = g1.node_label(v) == g2.node_label(mapping[v]);
      }
    }
    for (std::size_t e = 0; e < g1.edge_count() && ok; ++e) {
      auto [u, v] = g1.edges()[e];
      auto image = g2.edge_index(mapping[u], mapping[v]);
      ok = image.has_value();
      if (ok && mode == iso::IsoMode::NodeAndEdgeLabels) {
        ok = g2.edge_label(*image) == g1.edge_label(e);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(mapping.begin(), mapping.end()));
  return false;
}

}  // namespace testutil
