#include "isotool/refine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace iso {

Coloring Coloring::uniform(std::uint32_t n) {
  Coloring c;
  c.color_of.assign(n, 0);
  c.num_colors = n > 0 ? 1 : 0;
  return c;
}

std::vector<std::vector<VertexId>> Coloring::cells() const {
  std::vector<std::vector<VertexId>> out(num_colors);
  for (VertexId v = 0; v < color_of.size(); ++v) {
    out[color_of[v]].push_back(v);
  }
  return out;
}

Coloring initial_coloring(const Graph& g, IsoMode mode) {
  if (mode == IsoMode::Topology) return Coloring::uniform(g.node_count());
  if (!g.has_node_labels()) {
    throw GraphError("mode " + std::string(to_string(mode)) +
                     " requires node labels");
  }
  if (mode == IsoMode::NodeAndEdgeLabels && g.edge_count() > 0 &&
      !g.has_edge_labels()) {
    throw GraphError("mode node-edge-labels requires edge labels");
  }
  // Rank of the label value; the rank order matches the value order so
  // corresponding vertices of label-isomorphic graphs get equal colors.
  std::vector<std::int32_t> values(g.node_labels().begin(),
                                   g.node_labels().end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Coloring c;
  c.color_of.resize(g.node_count());
  for (VertexId v = 0; v < g.node_count(); ++v) {
    c.color_of[v] = static_cast<std::int32_t>(
        std::lower_bound(values.begin(), values.end(), g.node_label(v)) -
        values.begin());
  }
  c.num_colors = static_cast<std::int32_t>(values.size());
  return c;
}

namespace {

void validate_initial(const Graph& g, const Coloring& c) {
  if (c.color_of.size() != g.node_count()) {
    throw GraphError("coloring covers " + std::to_string(c.color_of.size()) +
                     " vertices, graph has " + std::to_string(g.node_count()));
  }
  std::vector<bool> seen(c.num_colors, false);
  for (std::int32_t col : c.color_of) {
    if (col < 0 || col >= c.num_colors) {
      throw GraphError("color id out of range in initial coloring");
    }
    seen[col] = true;
  }
  for (std::int32_t col = 0; col < c.num_colors; ++col) {
    if (!seen[col]) {
      throw GraphError("initial coloring has empty color class " +
                       std::to_string(col));
    }
  }
}

}  // namespace

RefineResult refine_traced(const Graph& g, const Coloring& initial,
                           IsoMode mode) {
  validate_initial(g, initial);
  const std::uint32_t n = g.node_count();
  const bool use_edge_labels = mode == IsoMode::NodeAndEdgeLabels;

  Coloring current = initial;
  std::uint64_t trace = detail::hash_combine(n, g.edge_count());
  trace = detail::hash_combine(trace, static_cast<std::uint64_t>(mode));
  trace = detail::hash_combine(trace, current.num_colors);

  if (n == 0) return {current, trace};

  std::vector<std::vector<std::uint64_t>> signatures(n);
  std::vector<VertexId> order(n);
  std::vector<std::int32_t> next(n);

  while (true) {
    for (VertexId v = 0; v < n; ++v) {
      auto& sig = signatures[v];
      sig.clear();
      auto nbrs = g.neighbors(v);
      auto eidx = g.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        std::uint64_t entry =
            static_cast<std::uint64_t>(current.color_of[nbrs[i]]);
        if (use_edge_labels) {
          entry = (entry << 32) |
                  static_cast<std::uint32_t>(g.edge_label(eidx[i]));
        }
        sig.push_back(entry);
      }
      std::sort(sig.begin(), sig.end());
    }

    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      if (current.color_of[a] != current.color_of[b])
        return current.color_of[a] < current.color_of[b];
      return signatures[a] < signatures[b];
    });

    std::int32_t colors = 0;
    next[order[0]] = 0;
    for (std::uint32_t i = 1; i < n; ++i) {
      VertexId prev = order[i - 1], cur = order[i];
      if (current.color_of[prev] != current.color_of[cur] ||
          signatures[prev] != signatures[cur]) {
        ++colors;
      }
      next[cur] = colors;
    }
    ++colors;

    trace = detail::hash_combine(trace, static_cast<std::uint64_t>(colors));
    if (colors == current.num_colors) break;
    current.color_of = next;
    current.num_colors = colors;
  }

  // Fold final cell sizes into the trace, in partition order.
  std::vector<std::uint32_t> sizes(current.num_colors, 0);
  for (std::int32_t c : current.color_of) ++sizes[c];
  for (std::uint32_t s : sizes) trace = detail::hash_combine(trace, s);

  return {std::move(current), trace};
}

Coloring refine(const Graph& g, const Coloring& initial, IsoMode mode) {
  return refine_traced(g, initial, mode).coloring;
}

}  // namespace iso
