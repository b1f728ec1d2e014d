#pragma once

#include <cstdint>
#include <vector>

#include "isotool/graph.hpp"

namespace iso {

// Vertex coloring with contiguous color ids [0, num_colors). Doubles as an
// ordered partition: cell k holds the vertices of color k in ascending order.
struct Coloring {
  std::vector<std::int32_t> color_of;
  std::int32_t num_colors = 0;

  static Coloring uniform(std::uint32_t n);

  bool discrete() const {
    return static_cast<std::size_t>(num_colors) == color_of.size();
  }
  std::vector<std::vector<VertexId>> cells() const;
};

// Initial coloring for a mode: uniform for Topology, node-label value rank
// otherwise. Throws GraphError when required labels are absent.
Coloring initial_coloring(const Graph& g, IsoMode mode);

struct RefineResult {
  Coloring coloring;
  // Order-invariant digest of the refinement run (per-round color counts and
  // final cell sizes); equal for corresponding colorings of isomorphic graphs.
  std::uint64_t trace = 0;
};

// Coarsest stable refinement of `initial` under 1-WL color refinement: two
// vertices keep equal colors iff they started equal and saw equal multisets
// of neighbor colors (plus incident edge labels in NodeAndEdgeLabels mode)
// every round. New color ids are assigned by (old color, signature) rank, so
// the result is deterministic and permutation-compatible.
RefineResult refine_traced(const Graph& g, const Coloring& initial,
                           IsoMode mode);

Coloring refine(const Graph& g, const Coloring& initial, IsoMode mode);

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) +
                       (seed >> 2)));
}

}  // namespace detail

}  // namespace iso
